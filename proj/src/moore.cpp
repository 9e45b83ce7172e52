#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ddsynth/moore.hpp"

namespace ddsynth {

void MooreMachine::validate() const {
  for (const auto& n : inputs.names())
    if (outputs.contains(n)) throw Error("proposition '" + n + "' is both input and output");
  if (label.empty()) throw Error("machine has no states");
  if (initial >= num_states()) throw Error("initial state out of range");
  if (trans.size() != num_states()) throw Error("transition table size mismatch");
  for (State t = 0; t < num_states(); ++t) {
    if (label[t] >= outputs.num_letters()) throw Error("label outside output alphabet");
    if (trans[t].size() != inputs.num_letters()) throw Error("transition table is not total");
    for (State s : trans[t])
      if (s >= num_states()) throw Error("transition target out of range");
  }
}

MooreMachine constant_machine(const Alphabet& inputs, const Alphabet& outputs, Letter label) {
  MooreMachine m{inputs, outputs, 0, {label}, {std::vector<State>(inputs.num_letters(), 0)}};
  m.validate();
  return m;
}

LassoWord computation(const MooreMachine& m, const LassoWord& gamma) {
  if (!gamma.props.same_set(m.inputs)) throw AlphabetMismatch("input word alphabet differs from machine inputs");
  LassoWord g = gamma.props == m.inputs ? gamma : reindex(gamma, m.inputs);
  auto names = m.inputs.names();
  for (const auto& n : m.outputs.names()) names.push_back(n);
  Alphabet props(names);
  const unsigned shift = static_cast<unsigned>(m.inputs.size());
  std::vector<Letter> letters;
  std::map<std::pair<State, std::size_t>, std::size_t> seen;
  State t = m.initial;
  for (std::size_t i = 0;; ++i) {
    if (i >= g.prefix.size()) {
      std::size_t k = (i - g.prefix.size()) % g.loop.size();
      auto [it, fresh] = seen.emplace(std::make_pair(t, k), i);
      if (!fresh) {
        std::size_t j = it->second;
        return LassoWord{props, std::vector<Letter>(letters.begin(), letters.begin() + j),
                         std::vector<Letter>(letters.begin() + j, letters.end())};
      }
    }
    Letter in = g.at(i);
    letters.push_back(in | (m.label[t] << shift));
    t = m.trans[t][in];
  }
}

MooreMachine compose(const MooreMachine& a, const MooreMachine& b) {
  for (const auto& n : a.outputs.names())
    if (b.outputs.contains(n)) throw Error("composed machines share output '" + n + "'");
  std::vector<std::string> in, out = a.outputs.names();
  for (const auto& n : b.outputs.names()) out.push_back(n);
  Alphabet outputs(out);
  for (const auto* m : {&a, &b})
    for (const auto& n : m->inputs.names())
      if (!outputs.contains(n) && std::find(in.begin(), in.end(), n) == in.end()) in.push_back(n);
  Alphabet inputs(in);
  // source of each component input: external input bit or the other machine's output bit
  auto wiring = [&](const MooreMachine& m, const MooreMachine& other) {
    std::vector<std::pair<bool, std::size_t>> w;
    for (const auto& n : m.inputs.names()) {
      if (auto i = inputs.index_of(n)) w.push_back({true, *i});
      else if (auto j = other.outputs.index_of(n)) w.push_back({false, *j});
      else throw Error("input '" + n + "' is neither external nor produced by the partner");
    }
    return w;
  };
  auto wa = wiring(a, b), wb = wiring(b, a);
  auto local = [](const std::vector<std::pair<bool, std::size_t>>& w, Letter ext, Letter partner) {
    Letter l = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      Letter src = w[k].first ? ext : partner;
      if (src >> w[k].second & 1) l |= Letter{1} << k;
    }
    return l;
  };
  MooreMachine m{inputs, outputs, 0, {}, {}};
  std::map<std::pair<State, State>, State> id;
  std::vector<std::pair<State, State>> order;
  auto get = [&](std::pair<State, State> p) {
    auto [it, fresh] = id.emplace(p, static_cast<State>(order.size()));
    if (fresh) order.push_back(p);
    return it->second;
  };
  get({a.initial, b.initial});
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto [s, t] = order[k];
    m.label.push_back(a.label[s] | (b.label[t] << a.outputs.size()));
    std::vector<State> row(inputs.num_letters());
    for (Letter l = 0; l < inputs.num_letters(); ++l) {
      State s2 = a.trans[s][local(wa, l, b.label[t])];
      State t2 = b.trans[t][local(wb, l, a.label[s])];
      row[l] = get({s2, t2});
    }
    m.trans.push_back(std::move(row));
  }
  return m;
}

MooreMachine bfs_canonical(const MooreMachine& m) {
  std::vector<std::int64_t> id(m.num_states(), -1);
  std::vector<State> order{m.initial};
  id[m.initial] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (State s : m.trans[order[k]])
      if (id[s] < 0) {
        id[s] = static_cast<std::int64_t>(order.size());
        order.push_back(s);
      }
  MooreMachine out{m.inputs, m.outputs, 0, {}, {}};
  for (State s : order) {
    out.label.push_back(m.label[s]);
    std::vector<State> row;
    for (State t : m.trans[s]) row.push_back(static_cast<State>(id[t]));
    out.trans.push_back(std::move(row));
  }
  return out;
}

MooreMachine prune_unreachable(const MooreMachine& m) { return bfs_canonical(m); }

MooreMachine minimize(const MooreMachine& in) {
  MooreMachine m = bfs_canonical(in);
  const std::size_t n = m.num_states();
  std::vector<State> block(n);
  for (State s = 0; s < n; ++s) block[s] = m.label[s];
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<State>, State> sig;
    std::vector<State> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<State> key{block[s]};
      for (State t : m.trans[s]) key.push_back(block[t]);
      next[s] = sig.emplace(key, static_cast<State>(sig.size())).first->second;
    }
    bool stable = sig.size() == count;
    count = sig.size();
    block = next;
    if (stable) break;
  }
  std::vector<std::int64_t> rep(count, -1);
  MooreMachine q{m.inputs, m.outputs, block[m.initial], std::vector<Letter>(count), std::vector<std::vector<State>>(count)};
  for (State s = 0; s < n; ++s) {
    if (rep[block[s]] >= 0) continue;
    rep[block[s]] = s;
    q.label[block[s]] = m.label[s];
    for (State t : m.trans[s]) q.trans[block[s]].push_back(block[t]);
  }
  return bfs_canonical(q);
}

namespace {

struct Enumerator {
  const Alphabet& in;
  const Alphabet& out;
  std::size_t max_states;
  const std::function<bool(const MooreMachine&)>& visit;
  MooreMachine m;
  std::size_t opened = 1;
  bool stop = false;

  void state(State t) {
    if (stop) return;
    if (t == opened) {
      if (!visit(m)) stop = true;
      return;
    }
    for (Letter o = 0; o < out.num_letters() && !stop; ++o) {
      m.label[t] = o;
      edge(t, 0);
    }
  }

  void edge(State t, Letter l) {
    if (stop) return;
    if (l == in.num_letters()) {
      state(t + 1);
      return;
    }
    std::size_t limit = std::min(opened + 1, max_states);
    for (State target = 0; target < limit && !stop; ++target) {
      bool fresh = target == opened;
      m.trans[t][l] = target;
      if (fresh) ++opened;
      edge(t, l + 1);
      if (fresh) --opened;
    }
  }
};

}  // namespace

void enumerate_machines(const Alphabet& inputs, const Alphabet& outputs, std::size_t max_states,
                        const std::function<bool(const MooreMachine&)>& visit) {
  if (max_states == 0) return;
  Enumerator* self = nullptr;
  // the visitor sees only the opened states
  std::function<bool(const MooreMachine&)> sized = [&](const MooreMachine& full) {
    MooreMachine m = full;
    m.label.resize(self->opened);
    m.trans.resize(self->opened);
    return visit(m);
  };
  Enumerator run{inputs, outputs, max_states, sized,
                 MooreMachine{inputs, outputs, 0, std::vector<Letter>(max_states, 0),
                              std::vector<std::vector<State>>(max_states, std::vector<State>(inputs.num_letters(), 0))},
                 1, false};
  self = &run;
  run.state(0);
}

std::vector<MooreMachine> enumerate_machines(const Alphabet& inputs, const Alphabet& outputs, std::size_t max_states) {
  std::vector<MooreMachine> out;
  enumerate_machines(inputs, outputs, max_states, [&](const MooreMachine& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::string write_moore(const MooreMachine& m) {
  std::ostringstream out;
  out << "moore\ninputs:";
  for (const auto& n : m.inputs.names()) out << ' ' << n;
  out << "\noutputs:";
  for (const auto& n : m.outputs.names()) out << ' ' << n;
  out << "\nstates: " << m.num_states() << "\ninitial: " << m.initial << '\n';
  for (State t = 0; t < m.num_states(); ++t) out << "label " << t << ": " << m.outputs.format_letter(m.label[t]) << '\n';
  for (State t = 0; t < m.num_states(); ++t)
    for (Letter l = 0; l < m.inputs.num_letters(); ++l)
      out << "trans " << t << ' ' << m.inputs.format_letter(l) << " -> " << m.trans[t][l] << '\n';
  return out.str();
}

namespace {

std::size_t parse_index(const std::string& s, std::size_t bound, std::size_t line) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used != s.size() || v >= bound) throw Error("");
    return v;
  } catch (...) {
    throw ParseError("bad number '" + s + "' on line " + std::to_string(line), line);
  }
}

}  // namespace

MooreMachine read_moore(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  MooreMachine m;
  std::size_t states = 0;
  std::vector<std::vector<std::int64_t>> trans;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (!header) {
      if (line != "moore") throw ParseError("expected 'moore' header", lineno);
      header = true;
      continue;
    }
    auto starts = [&](const char* p) { return line.rfind(p, 0) == 0; };
    auto value = [&] { return trim(line.substr(line.find(':') + 1)); };
    if (starts("inputs:")) {
      m.inputs = Alphabet(split_list(value()));
    } else if (starts("outputs:")) {
      m.outputs = Alphabet(split_list(value()));
    } else if (starts("states:")) {
      states = parse_index(value(), SIZE_MAX, lineno);
      if (states == 0) throw ParseError("machine needs at least one state", lineno);
      m.label.assign(states, 0);
      trans.assign(states, std::vector<std::int64_t>(m.inputs.num_letters(), -1));
    } else if (starts("initial:")) {
      m.initial = static_cast<State>(parse_index(value(), states, lineno));
    } else if (starts("label")) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError("label line needs ':'", lineno);
      std::size_t t = parse_index(trim(line.substr(5, colon - 5)), states, lineno);
      m.label[t] = m.outputs.parse_letter(value());
    } else if (starts("trans")) {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) throw ParseError("trans line needs '->'", lineno);
      std::string lhs = trim(line.substr(5, arrow - 5));
      auto sp = lhs.find_first_of(" \t");
      if (sp == std::string::npos) throw ParseError("trans line needs a state and a letter", lineno);
      std::size_t t = parse_index(lhs.substr(0, sp), states, lineno);
      std::string letter = trim(lhs.substr(sp));
      std::size_t target = parse_index(trim(line.substr(arrow + 2)), states, lineno);
      if (letter == "*") {
        for (auto& x : trans[t])
          if (x < 0) x = static_cast<std::int64_t>(target);
      } else {
        trans[t][m.inputs.parse_letter(letter)] = static_cast<std::int64_t>(target);
      }
    } else {
      throw ParseError("cannot parse line '" + line + "'", lineno);
    }
  }
  if (!header || states == 0) throw ParseError("incomplete machine file", lineno);
  for (std::size_t t = 0; t < states; ++t) {
    std::vector<State> row;
    for (Letter l = 0; l < m.inputs.num_letters(); ++l) {
      if (trans[t][l] < 0)
        throw ParseError("missing transition from state " + std::to_string(t) + " on " + m.inputs.format_letter(l),
                         lineno);
      row.push_back(static_cast<State>(trans[t][l]));
    }
    m.trans.push_back(std::move(row));
  }
  m.validate();
  return m;
}

std::string moore_to_dot(const MooreMachine& m) {
  std::ostringstream out;
  out << "digraph moore {\n  rankdir=LR;\n  init [shape=point];\n";
  for (State t = 0; t < m.num_states(); ++t)
    out << "  t" << t << " [label=\"" << t << "\\n" << m.outputs.format_letter(m.label[t]) << "\"];\n";
  out << "  init -> t" << m.initial << ";\n";
  for (State t = 0; t < m.num_states(); ++t) {
    std::map<State, std::vector<std::string>> by_target;
    for (Letter l = 0; l < m.inputs.num_letters(); ++l) by_target[m.trans[t][l]].push_back(m.inputs.format_letter(l));
    for (const auto& [s, ls] : by_target) {
      std::string label;
      for (const auto& x : ls) label += (label.empty() ? "" : " ") + x;
      out << "  t" << t << " -> t" << s << " [label=\"" << label << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

const Process& Architecture::process(const std::string& name) const {
  for (const auto& p : processes)
    if (p.name == name) return p;
  throw Error("unknown process '" + name + "'");
}

std::vector<std::string> Architecture::system_outputs() const {
  std::vector<std::string> out;
  for (const auto& p : processes) out.insert(out.end(), p.outputs.begin(), p.outputs.end());
  return out;
}

std::vector<std::string> Architecture::system_inputs() const {
  auto outs = system_outputs();
  std::vector<std::string> in = env_outputs;
  for (const auto& p : processes)
    for (const auto& n : p.inputs)
      if (std::find(outs.begin(), outs.end(), n) == outs.end() && std::find(in.begin(), in.end(), n) == in.end())
        in.push_back(n);
  return in;
}

std::vector<std::string> Architecture::variables() const {
  auto v = system_inputs();
  for (const auto& o : system_outputs()) v.push_back(o);
  return v;
}

void Architecture::validate() const {
  if (processes.empty()) throw Error("architecture has no processes");
  std::set<std::string> names, outs;
  for (const auto& p : processes) {
    if (!names.insert(p.name).second) throw Error("duplicate process '" + p.name + "'");
    if (p.outputs.empty()) throw Error("process '" + p.name + "' has no outputs");
    for (const auto& o : p.outputs) {
      if (!outs.insert(o).second) throw Error("output '" + o + "' is produced by two processes");
      if (std::find(p.inputs.begin(), p.inputs.end(), o) != p.inputs.end())
        throw Error("process '" + p.name + "' reads its own output '" + o + "'");
    }
  }
  for (const auto& e : env_outputs)
    if (outs.count(e)) throw Error("environment output '" + e + "' is also a process output");
  Alphabet check(variables());
  (void)check;
}

Architecture read_architecture(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool header = false;
  Architecture a;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (!header) {
      if (line != "architecture") throw ParseError("expected 'architecture' header", lineno);
      header = true;
      continue;
    }
    auto starts = [&](const char* p) { return line.rfind(p, 0) == 0; };
    auto value = [&] { return split_list(line.substr(line.find(':') + 1)); };
    if (starts("process")) {
      std::string name = trim(line.substr(7));
      if (name.empty()) throw ParseError("process needs a name", lineno);
      a.processes.push_back({name, {}, {}});
    } else if (starts("env:")) {
      a.env_outputs = value();
    } else if (starts("inputs:") || starts("outputs:")) {
      if (a.processes.empty()) throw ParseError("inputs/outputs outside a process block", lineno);
      (starts("inputs:") ? a.processes.back().inputs : a.processes.back().outputs) = value();
    } else {
      throw ParseError("cannot parse line '" + line + "'", lineno);
    }
  }
  if (!header) throw ParseError("empty architecture file", 0);
  a.validate();
  return a;
}

std::string write_architecture(const Architecture& a) {
  std::ostringstream out;
  out << "architecture\n";
  if (!a.env_outputs.empty()) {
    out << "env:";
    for (const auto& e : a.env_outputs) out << ' ' << e;
    out << '\n';
  }
  for (const auto& p : a.processes) {
    out << "process " << p.name << "\n  inputs:";
    for (const auto& n : p.inputs) out << ' ' << n;
    out << "\n  outputs:";
    for (const auto& n : p.outputs) out << ' ' << n;
    out << '\n';
  }
  return out.str();
}

}  // namespace ddsynth
