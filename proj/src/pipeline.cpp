#include <chrono>
#include <future>

#include <json.hpp>

#include "ddsynth/pipeline.hpp"

namespace ddsynth {

namespace {

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

nlohmann::json stages_json(const DdUcaStages& s) {
  return {{"phi_states", s.phi_states},
          {"negphi_states", s.negphi_states},
          {"product_states_before_pruning", s.product_states_before_pruning},
          {"product_states", s.product_states},
          {"nonprojected_states", s.nonprojected_states},
          {"dd_states", s.dd_states}};
}

ProcessReport run_process(const Formula& phi, const Architecture& arch, const Process& p, const Schedule& schedule,
                          const SynthOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  ProcessReport r;
  r.name = p.name;
  try {
    Uca dd = build_dd_uca(phi, arch, p.name, &r.stages);
    r.dd_states = dd.num_states();
    SynthesisResult s = synthesize_with_schedule(dd, Alphabet(p.inputs), Alphabet(p.outputs), schedule, opts);
    r.tried = s.tried;
    if (s.machine) {
      r.machine = s.machine;
      r.machine_bound = s.machine_bound;
      r.counter_bound = s.counter_bound;
      r.dd_verified = uca_model_check(dd, *s.machine).accepted;
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = since(t0);
  return r;
}

/// Same machine reading additional, ignored inputs.
MooreMachine widen_inputs(const MooreMachine& m, const Alphabet& inputs) {
  if (inputs == m.inputs) return m;
  LetterMap map(inputs, m.inputs);
  MooreMachine out{inputs, m.outputs, m.initial, m.label, {}};
  for (const auto& row : m.trans) {
    std::vector<State> wide(inputs.num_letters());
    for (Letter l = 0; l < inputs.num_letters(); ++l) wide[l] = row[map(l)];
    out.trans.push_back(std::move(wide));
  }
  return out;
}

}  // namespace

std::string PipelineReport::to_json(bool with_timing) const {
  nlohmann::json j;
  j["formula"] = formula;
  j["phi_states"] = phi_states;
  j["processes"] = nlohmann::json::array();
  for (const auto& p : processes) {
    nlohmann::json x;
    x["name"] = p.name;
    x["stages"] = stages_json(p.stages);
    x["synthesized"] = p.machine.has_value();
    if (p.machine) {
      x["machine_states"] = p.machine->num_states();
      x["machine_bound"] = p.machine_bound;
      x["counter_bound"] = p.counter_bound;
    }
    x["bounds_tried"] = nlohmann::json::array();
    for (const auto& b : p.tried) x["bounds_tried"].push_back({b.machine_bound, b.counter_bound, b.found});
    x["dd_verified"] = p.dd_verified;
    if (!p.error.empty()) x["error"] = p.error;
    if (with_timing) x["seconds"] = p.seconds;
    j["processes"].push_back(x);
  }
  if (composed) j["composed_states"] = composed->num_states();
  j["system_dd_states"] = system_dd_states;
  j["composed_dd"] = composed_dd ? nlohmann::json(*composed_dd) : nlohmann::json(nullptr);
  j["composed_winning"] = composed_winning ? nlohmann::json(*composed_winning) : nlohmann::json(nullptr);
  if (dd_counterexample) j["dd_counterexample"] = format_lasso(*dd_counterexample);
  if (winning_counterexample) j["winning_counterexample"] = format_lasso(*winning_counterexample);
  if (with_timing) j["seconds"] = seconds;
  return j.dump(2) + "\n";
}

PipelineResult compositional_synth(const Formula& phi, const Architecture& arch, const Schedule& schedule,
                                   const SynthOptions& opts) {
  arch.validate();
  if (arch.processes.size() < 2) throw Error("compositional synthesis needs at least two processes");
  auto t0 = std::chrono::steady_clock::now();
  PipelineResult res;
  PipelineReport& rep = res.report;
  rep.formula = to_string(phi);
  Alphabet vars(arch.variables());
  for (const auto& a : atoms(phi))
    if (!vars.contains(a)) throw AlphabetMismatch("formula mentions '" + a + "' which is not in the architecture");
  rep.phi_states = ltl_to_aca(phi, vars).num_states();

  std::vector<std::future<ProcessReport>> jobs;
  for (const auto& p : arch.processes)
    jobs.push_back(std::async(std::launch::async, run_process, phi, std::cref(arch), std::cref(p), std::cref(schedule),
                              std::cref(opts)));
  for (auto& j : jobs) rep.processes.push_back(j.get());

  for (const auto& p : rep.processes)
    if (!p.machine) {
      rep.seconds = since(t0);
      return res;
    }
  MooreMachine composed = *rep.processes[0].machine;
  for (std::size_t k = 1; k < rep.processes.size(); ++k) composed = compose(composed, *rep.processes[k].machine);
  composed = widen_inputs(minimize(composed), Alphabet(arch.system_inputs()));
  rep.composed = composed;
  res.composed = composed;

  DdUcaStages sys;
  Uca system_dd = build_system_dd_uca(phi, arch, &sys);
  rep.system_dd_states = system_dd.num_states();
  auto dd = uca_model_check(system_dd, composed);
  rep.composed_dd = dd.accepted;
  rep.dd_counterexample = dd.counterexample;

  std::vector<std::string> names = composed.inputs.names();
  names.insert(names.end(), composed.outputs.names().begin(), composed.outputs.names().end());
  auto win = uca_model_check(ltl_to_uca(phi, Alphabet(names)), composed);
  rep.composed_winning = win.accepted;
  rep.winning_counterexample = win.counterexample;
  rep.seconds = since(t0);
  return res;
}

}  // namespace ddsynth
