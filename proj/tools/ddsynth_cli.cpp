#include <chrono>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddsynth/dd_game.hpp"
#include "ddsynth/pipeline.hpp"

using namespace ddsynth;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kExhausted = 2, kInputError = 3 };

std::set<std::string> prop_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

void maybe_write(const std::string& path, const std::string& text) {
  if (!path.empty()) write_file(path, text);
}

Schedule schedule_for(std::size_t max_states, std::size_t max_counter) {
  Schedule s;
  s.machine_bounds.clear();
  for (std::size_t n = 1; n <= max_states; ++n) s.machine_bounds.push_back(n);
  s.counter_bounds.clear();
  for (std::size_t k : {1, 2, 4, 8})
    if (k <= max_counter) s.counter_bounds.push_back(k);
  if (s.counter_bounds.empty() || s.counter_bounds.back() != max_counter) s.counter_bounds.push_back(max_counter);
  return s;
}

Formula formula_over_arch(const std::string& text, const Architecture& arch) {
  return parse_ltl(text, prop_set(arch.variables()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delay-dominance toolkit: automata, games and bounded synthesis"};
  app.require_subcommand(1);
  std::string dot, report;
  int code = kOk;

  auto* translate = app.add_subcommand("translate", "LTL formula to alternating co-Buchi automaton");
  std::string t_ltl, t_props, t_out;
  bool t_negate = false;
  translate->add_option("--ltl", t_ltl, "formula")->required();
  translate->add_option("--props", t_props, "propositions, comma separated")->required();
  translate->add_flag("--negate", t_negate, "translate the negated formula");
  translate->add_option("-o", t_out, "output automaton file")->required();

  auto* build_dd = app.add_subcommand("build-dd", "product automaton for delay-dominance");
  std::string b_aca, b_neg, b_outputs, b_out;
  build_dd->add_option("--aca", b_aca)->required();
  build_dd->add_option("--neg-aca", b_neg)->required();
  build_dd->add_option("--outputs", b_outputs)->required();
  build_dd->add_option("-o", b_out)->required();

  auto* to_uca = app.add_subcommand("to-uca", "alternating to universal co-Buchi automaton");
  std::string u_aca, u_out;
  to_uca->add_option("--aca", u_aca)->required();
  to_uca->add_option("-o", u_out)->required();

  auto* project = app.add_subcommand("project", "universal projection");
  std::string p_uca, p_keep, p_out;
  project->add_option("--uca", p_uca)->required();
  project->add_option("--keep", p_keep)->required();
  project->add_option("-o", p_out)->required();

  auto* synth = app.add_subcommand("synth", "bounded synthesis from a universal automaton");
  std::string s_uca, s_inputs, s_outputs, s_out, s_dimacs;
  std::size_t s_states = 4, s_counter = 8;
  synth->add_option("--uca", s_uca)->required();
  synth->add_option("--inputs", s_inputs)->required();
  synth->add_option("--outputs", s_outputs)->required();
  synth->add_option("--max-states", s_states)->check(CLI::PositiveNumber);
  synth->add_option("--max-counter", s_counter)->check(CLI::Range(0, 100));
  synth->add_option("--emit-dimacs", s_dimacs, "write the counting game constraints at the largest counter bound");
  synth->add_option("-o", s_out)->required();

  auto* synth_dd = app.add_subcommand("synth-dd", "synthesize a delay-dominant strategy for a process");
  std::string sd_ltl, sd_arch, sd_proc, sd_out;
  synth_dd->add_option("--ltl", sd_ltl)->required();
  synth_dd->add_option("--arch", sd_arch)->required();
  synth_dd->add_option("--process", sd_proc)->required();
  synth_dd->add_option("-o", sd_out)->required();

  auto* check_dd = app.add_subcommand("check-dd", "check that a machine is delay-dominant");
  std::string c_ltl, c_arch, c_proc, c_machine, c_aca, c_neg, c_inputs, c_outputs;
  check_dd->add_option("--ltl", c_ltl);
  check_dd->add_option("--arch", c_arch);
  check_dd->add_option("--process", c_proc);
  check_dd->add_option("--aca", c_aca, "automaton for the specification, instead of --ltl");
  check_dd->add_option("--neg-aca", c_neg, "automaton for the negated specification (default: complement of a weak --aca)");
  check_dd->add_option("--inputs", c_inputs);
  check_dd->add_option("--outputs", c_outputs);
  check_dd->add_option("--machine", c_machine)->required();

  auto* pair = app.add_subcommand("check-dd-pair", "solve the delay-dominance game on one input word");
  std::string g_aca, g_dom, g_alt, g_gamma;
  pair->add_option("--aca", g_aca)->required();
  pair->add_option("--dominant", g_dom)->required();
  pair->add_option("--alt", g_alt)->required();
  pair->add_option("--gamma", g_gamma)->required();

  auto* comp = app.add_subcommand("compose", "parallel composition of machines");
  std::vector<std::string> m_files;
  std::string m_out;
  comp->add_option("--machines", m_files)->required()->expected(1, -1);
  comp->add_option("-o", m_out)->required();

  auto* mc = app.add_subcommand("mc", "model check a machine against a universal automaton");
  std::string mc_uca, mc_machine;
  mc->add_option("--uca", mc_uca)->required();
  mc->add_option("--machine", mc_machine)->required();

  auto* compositional = app.add_subcommand("compositional", "full compositional synthesis pipeline");
  std::string cp_ltl, cp_arch, cp_dir;
  compositional->add_option("--ltl", cp_ltl)->required();
  compositional->add_option("--arch", cp_arch)->required();
  compositional->add_option("-o", cp_dir, "output directory")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--dot", dot, "write a Graphviz rendering");
    sub->add_option("--report", report, "write a JSON report");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  json rep;
  try {
    if (*translate) {
      Alphabet props(split_list(t_props));
      Formula f = parse_ltl(t_ltl, prop_set(props.names()));
      if (t_negate) f = ltl_not(f);
      Aca a = ltl_to_aca(f, props);
      write_file(t_out, write_aca(a));
      maybe_write(dot, aca_to_dot(a));
      rep = {{"states", a.num_states()}, {"formula", to_string(f)}};
      std::cout << "aca with " << a.num_states() << " states\n";
    } else if (*build_dd) {
      Aca a = read_aca(read_file(b_aca)), n = read_aca(read_file(b_neg));
      DdProductAca p = build_dd_aca(a, n, split_list(b_outputs));
      write_file(b_out, write_aca(p.aca));
      maybe_write(dot, aca_to_dot(p.aca));
      rep = {{"states_before_pruning", p.states_before_pruning}, {"states", p.aca.num_states()}};
      std::cout << "product automaton: " << p.states_before_pruning << " states, " << p.aca.num_states()
                << " reachable\n";
    } else if (*to_uca) {
      Uca u = aca_to_uca(read_aca(read_file(u_aca)));
      write_file(u_out, write_uca(u));
      maybe_write(dot, uca_to_dot(u));
      rep = {{"states", u.num_states()}};
      std::cout << "uca with " << u.num_states() << " states\n";
    } else if (*project) {
      Uca u = universal_project(read_uca(read_file(p_uca)), split_list(p_keep));
      write_file(p_out, write_uca(u));
      maybe_write(dot, uca_to_dot(u));
      rep = {{"states", u.num_states()}};
      std::cout << "projected uca over " << u.props.size() << " propositions\n";
    } else if (*synth) {
      Uca u = read_uca(read_file(s_uca));
      Alphabet in(split_list(s_inputs)), out(split_list(s_outputs));
      if (!s_dimacs.empty()) write_file(s_dimacs, export_dimacs(u, in, out, s_counter));
      SynthesisResult r = synthesize_with_schedule(u, in, out, schedule_for(s_states, s_counter));
      rep["bounds_tried"] = json::array();
      for (const auto& b : r.tried) rep["bounds_tried"].push_back({b.machine_bound, b.counter_bound, b.found});
      if (!r.machine) {
        std::cout << "no machine within the bounds\n";
        code = kExhausted;
      } else {
        write_file(s_out, write_moore(*r.machine));
        maybe_write(dot, moore_to_dot(*r.machine));
        rep["machine_states"] = r.machine->num_states();
        std::cout << "machine with " << r.machine->num_states() << " states (bound " << r.machine_bound
                  << ", counter " << r.counter_bound << ")\n";
      }
    } else if (*synth_dd) {
      Architecture arch = read_architecture(read_file(sd_arch));
      SynthesisResult r = synthesize_dd(formula_over_arch(sd_ltl, arch), arch, sd_proc);
      rep["dd_states"] = r.uca_states;
      rep["bounds_tried"] = json::array();
      for (const auto& b : r.tried) rep["bounds_tried"].push_back({b.machine_bound, b.counter_bound, b.found});
      if (!r.machine) {
        std::cout << "no delay-dominant machine within the bounds\n";
        code = kExhausted;
      } else {
        write_file(sd_out, write_moore(*r.machine));
        maybe_write(dot, moore_to_dot(*r.machine));
        rep["machine_states"] = r.machine->num_states();
        std::cout << "delay-dominant machine with " << r.machine->num_states() << " states\n";
      }
    } else if (*check_dd) {
      MooreMachine m = read_moore(read_file(c_machine));
      Uca dd;
      if (!c_aca.empty()) {
        Aca a = read_aca(read_file(c_aca));
        Aca n = c_neg.empty() ? complement_weak(a) : read_aca(read_file(c_neg));
        dd = build_dd_uca(a, n, split_list(c_inputs), split_list(c_outputs));
      } else {
        if (c_ltl.empty() || c_arch.empty() || c_proc.empty())
          throw Error("check-dd needs --ltl, --arch and --process, or --aca and --neg-aca");
        Architecture arch = read_architecture(read_file(c_arch));
        dd = build_dd_uca(formula_over_arch(c_ltl, arch), arch, c_proc);
      }
      ModelCheckResult r = uca_model_check(dd, m);
      rep["dd_states"] = dd.num_states();
      rep["delay_dominant"] = r.accepted;
      if (r.accepted) {
        std::cout << "delay-dominant\n";
      } else {
        std::cout << "not delay-dominant\ncounterexample input: " << format_lasso(*r.counterexample) << '\n';
        rep["counterexample"] = format_lasso(*r.counterexample);
        code = kFails;
      }
      maybe_write(dot, uca_to_dot(dd));
    } else if (*pair) {
      Aca a = read_aca(read_file(g_aca));
      MooreMachine s = read_moore(read_file(g_dom)), t = read_moore(read_file(g_alt));
      LassoWord gamma = parse_lasso(g_gamma, s.inputs);
      DdGame g = build_dd_game(a, computation(t, gamma), computation(s, gamma));
      DdResult r = solve_dd_game(g);
      rep = {{"duplicator_wins", r.duplicator_wins},
             {"positions", r.num_positions},
             {"edges", r.num_edges},
             {"witness", format_witness(g, r)}};
      std::cout << (r.duplicator_wins ? "delay-dominates" : "does not delay-dominate") << '\n'
                << "positions: " << r.num_positions << ", edges: " << r.num_edges << '\n'
                << "witness: " << format_witness(g, r) << '\n';
      if (r.unmatched_round) {
        std::cout << "unmatched rejecting dominant state at round " << *r.unmatched_round << '\n';
        rep["unmatched_round"] = *r.unmatched_round;
      }
      maybe_write(dot, dd_game_to_dot(g, r));
      if (!r.duplicator_wins) code = kFails;
    } else if (*comp) {
      MooreMachine m = read_moore(read_file(m_files.at(0)));
      for (std::size_t k = 1; k < m_files.size(); ++k) m = compose(m, read_moore(read_file(m_files[k])));
      write_file(m_out, write_moore(m));
      maybe_write(dot, moore_to_dot(m));
      rep = {{"states", m.num_states()}};
      std::cout << "composed machine with " << m.num_states() << " states\n";
    } else if (*mc) {
      Uca u = read_uca(read_file(mc_uca));
      ModelCheckResult r = uca_model_check(u, read_moore(read_file(mc_machine)));
      rep = {{"accepted", r.accepted}, {"product_states", r.product_states}};
      if (r.accepted) {
        std::cout << "accepted on all inputs\n";
      } else {
        std::cout << "rejected\ncounterexample input: " << format_lasso(*r.counterexample) << '\n';
        rep["counterexample"] = format_lasso(*r.counterexample);
        code = kFails;
      }
    } else if (*compositional) {
      Architecture arch = read_architecture(read_file(cp_arch));
      PipelineResult r = compositional_synth(formula_over_arch(cp_ltl, arch), arch);
      std::filesystem::create_directories(cp_dir);
      for (const auto& p : r.report.processes)
        if (p.machine) write_file(cp_dir + "/" + p.name + ".moore", write_moore(*p.machine));
      write_file(cp_dir + "/report.json", r.report.to_json());
      maybe_write(report, r.report.to_json());
      if (!r.composed) {
        std::cout << "some process could not be synthesized\n";
        return kExhausted;
      }
      write_file(cp_dir + "/composed.moore", write_moore(*r.composed));
      maybe_write(dot, moore_to_dot(*r.composed));
      bool ok = *r.report.composed_dd && *r.report.composed_winning;
      std::cout << "composed machine with " << r.composed->num_states() << " states\n"
                << "composed delay-dominant: " << (*r.report.composed_dd ? "yes" : "no") << '\n'
                << "composed winning: " << (*r.report.composed_winning ? "yes" : "no") << '\n';
      return ok ? kOk : kFails;
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const AlphabetMismatch& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  maybe_write(report, rep.dump(2) + "\n");
  return code;
}
