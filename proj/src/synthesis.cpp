#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "ddsynth/games.hpp"
#include "ddsynth/synthesis.hpp"

namespace ddsynth {

namespace {

/// u-letter for each (input letter, output letter).
std::vector<std::vector<Letter>> letter_table(const Uca& u, const Alphabet& inputs, const Alphabet& outputs) {
  std::vector<std::string> names = inputs.names();
  names.insert(names.end(), outputs.names().begin(), outputs.names().end());
  if (!Alphabet(names).same_set(u.props))
    throw AlphabetMismatch("automaton propositions must be exactly the machine inputs and outputs");
  LetterMap mi(inputs, u.props), mo(outputs, u.props);
  std::vector<std::vector<Letter>> t(inputs.num_letters(), std::vector<Letter>(outputs.num_letters()));
  for (Letter i = 0; i < inputs.num_letters(); ++i)
    for (Letter o = 0; o < outputs.num_letters(); ++o) t[i][o] = mi(i) | mo(o);
  return t;
}

using Counters = std::vector<std::int8_t>;

struct CountingGame {
  Arena arena;
  std::vector<Counters> counters;  ///< per system node
  std::vector<Letter> output;      ///< per environment node
  std::vector<char> safe;
  bool budget_exceeded = false;
  SafetySolution solution;
};

CountingGame build_counting_game(const Uca& u, const std::vector<std::vector<Letter>>& table, Letter n_in,
                                 Letter n_out, std::size_t k, std::size_t budget) {
  CountingGame g;
  std::map<Counters, Node> index;
  std::vector<Node> work;
  const auto bound = static_cast<int>(k);
  auto get = [&](Counters c) -> Node {
    auto it = index.find(c);
    if (it != index.end()) return it->second;
    Node v = g.arena.add_node(0);
    bool ok = std::all_of(c.begin(), c.end(), [&](std::int8_t x) { return x <= bound; });
    g.safe.push_back(ok);
    g.output.push_back(0);
    g.counters.push_back(c);
    index.emplace(std::move(c), v);
    if (ok) work.push_back(v);
    return v;
  };
  Counters init(u.num_states(), -1);
  init[u.initial] = u.rejecting[u.initial] ? 1 : 0;
  get(init);
  while (!work.empty()) {
    if (g.arena.size() > budget) {
      g.budget_exceeded = true;
      return g;
    }
    Node v = work.back();
    work.pop_back();
    Counters cur = g.counters[v];
    for (Letter o = 0; o < n_out; ++o) {
      Node e = g.arena.add_node(1);
      g.safe.push_back(1);
      g.output.push_back(o);
      g.counters.emplace_back();
      g.arena.succ[v].push_back(e);
      std::vector<Node> next;
      for (Letter i = 0; i < n_in; ++i) {
        Counters c(u.num_states(), -1);
        Letter l = table[i][o];
        for (State q = 0; q < u.num_states(); ++q) {
          if (cur[q] < 0) continue;
          for (State r : u.succ[q][l]) {
            int val = std::min(cur[q] + (u.rejecting[r] ? 1 : 0), bound + 1);
            if (val > c[r]) c[r] = static_cast<std::int8_t>(val);
          }
        }
        next.push_back(get(std::move(c)));
      }
      g.arena.succ[e] = std::move(next);
    }
  }
  g.solution = solve_safety(g.arena, 0, g.safe);
  return g;
}

std::optional<MooreMachine> extract(const CountingGame& g, const Alphabet& inputs, const Alphabet& outputs) {
  if (!g.solution.win[0]) return std::nullopt;
  std::map<Node, State> id;
  std::vector<Node> order{0};
  id[0] = 0;
  MooreMachine m{inputs, outputs, 0, {}, {}};
  for (std::size_t k = 0; k < order.size(); ++k) {
    Node e = static_cast<Node>(g.solution.strategy[order[k]]);
    m.label.push_back(g.output[e]);
    std::vector<State> row;
    for (Node s : g.arena.succ[e]) {
      auto [it, fresh] = id.emplace(s, static_cast<State>(order.size()));
      if (fresh) order.push_back(s);
      row.push_back(it->second);
    }
    m.trans.push_back(std::move(row));
  }
  return minimize(m);
}

class AnnotationSearch {
 public:
  AnnotationSearch(const Uca& u, const std::vector<std::vector<Letter>>& table, const Alphabet& inputs,
                   const Alphabet& outputs, std::size_t n, std::size_t k, std::size_t budget)
      : u_(u), table_(table), inputs_(inputs), outputs_(outputs), n_(n), k_(static_cast<int>(k)), budget_(budget),
        nq_(u.num_states()), label_(n, 0), trans_(n, std::vector<std::int64_t>(inputs.num_letters(), -1)),
        lambda_(n * nq_, -1) {}

  std::optional<MooreMachine> run() {
    int init = u_.rejecting[u_.initial] ? 1 : 0;
    if (init > k_) return std::nullopt;
    lambda_[u_.initial] = static_cast<std::int8_t>(init);
    if (!state(0)) return std::nullopt;
    return result_;
  }

  std::size_t nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  bool state(State t) {
    if (t == opened_) {
      MooreMachine m{inputs_, outputs_, 0, {}, {}};
      for (State s = 0; s < opened_; ++s) {
        m.label.push_back(label_[s]);
        std::vector<State> row;
        for (auto x : trans_[s]) row.push_back(static_cast<State>(x));
        m.trans.push_back(std::move(row));
      }
      result_ = std::move(m);
      return true;
    }
    for (Letter o = 0; o < outputs_.num_letters(); ++o) {
      label_[t] = o;
      if (edge(t, 0)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  bool edge(State t, Letter i) {
    if (i == inputs_.num_letters()) return state(t + 1);
    std::size_t limit = std::min<std::size_t>(opened_ + 1, n_);
    for (State target = 0; target < limit; ++target) {
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      auto saved = lambda_;
      std::size_t saved_open = opened_;
      if (target == opened_) ++opened_;
      trans_[t][i] = target;
      std::deque<State> work;
      for (State q = 0; q < nq_; ++q)
        if (lambda_[t * nq_ + q] >= 0) work.push_back(q);
      if (relax(t, std::move(work)) && edge(t, i + 1)) return true;
      trans_[t][i] = -1;
      lambda_ = std::move(saved);
      opened_ = saved_open;
      if (exhausted_) return false;
    }
    return false;
  }

  /// Propagates counters from (t, q) for q in work along all defined edges.
  bool relax(State t0, std::deque<State> seeds) {
    std::deque<std::pair<State, State>> work;
    for (State q : seeds) work.push_back({t0, q});
    while (!work.empty()) {
      auto [t, q] = work.front();
      work.pop_front();
      int base = lambda_[t * nq_ + q];
      for (Letter i = 0; i < inputs_.num_letters(); ++i) {
        if (trans_[t][i] < 0) continue;
        auto t2 = static_cast<State>(trans_[t][i]);
        for (State r : u_.succ[q][table_[i][label_[t]]]) {
          int val = base + (u_.rejecting[r] ? 1 : 0);
          auto& slot = lambda_[t2 * nq_ + r];
          if (val <= slot) continue;
          if (val > k_) return false;
          slot = static_cast<std::int8_t>(val);
          work.push_back({t2, r});
        }
      }
    }
    return true;
  }

  const Uca& u_;
  const std::vector<std::vector<Letter>>& table_;
  const Alphabet& inputs_;
  const Alphabet& outputs_;
  std::size_t n_;
  int k_;
  std::size_t budget_;
  std::size_t nq_;
  std::vector<Letter> label_;
  std::vector<std::vector<std::int64_t>> trans_;
  std::vector<std::int8_t> lambda_;
  State opened_ = 1;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::optional<MooreMachine> result_;
};

void verify(const Uca& u, const MooreMachine& m) {
  if (!uca_model_check(u, m).accepted) throw Error("synthesized machine fails model checking");
}

std::optional<MooreMachine> search_cell(const Uca& u, const std::vector<std::vector<Letter>>& table,
                                        const Alphabet& inputs, const Alphabet& outputs, std::size_t n, std::size_t k,
                                        const std::optional<MooreMachine>& from_game, bool game_lost,
                                        SynthStats* stats, const SynthOptions& opts) {
  if (game_lost) return std::nullopt;
  if (from_game && from_game->num_states() <= n) {
    if (stats) stats->from_game = true;
    verify(u, *from_game);
    return from_game;
  }
  AnnotationSearch search(u, table, inputs, outputs, n, k, opts.search_budget);
  auto m = search.run();
  if (stats) {
    stats->search_nodes += search.nodes();
    stats->search_budget_exceeded = stats->search_budget_exceeded || search.exhausted();
  }
  if (m) {
    *m = minimize(*m);
    verify(u, *m);
  }
  return m;
}

struct GameCell {
  std::optional<MooreMachine> machine;
  bool lost = false;
  std::size_t positions = 0;
  bool budget_exceeded = false;
};

GameCell solve_cell(const Uca& u, const std::vector<std::vector<Letter>>& table, const Alphabet& inputs,
                    const Alphabet& outputs, std::size_t k, const SynthOptions& opts) {
  CountingGame g = build_counting_game(u, table, inputs.num_letters(), outputs.num_letters(), k, opts.game_budget);
  GameCell c;
  c.positions = g.arena.size();
  c.budget_exceeded = g.budget_exceeded;
  if (g.budget_exceeded) return c;
  c.machine = extract(g, inputs, outputs);
  c.lost = !c.machine;
  return c;
}

}  // namespace

ModelCheckResult uca_model_check(const Uca& u, const MooreMachine& m) {
  auto table = letter_table(u, m.inputs, m.outputs);
  const std::size_t nq = u.num_states();
  std::vector<std::int64_t> id(m.num_states() * nq, -1);
  std::vector<std::pair<State, State>> info;
  Graph g;
  std::vector<std::vector<Letter>> edge_input;
  std::vector<Node> work;
  auto node = [&](State t, State q) {
    auto& x = id[t * nq + q];
    if (x < 0) {
      x = static_cast<std::int64_t>(info.size());
      info.push_back({t, q});
      g.succ.emplace_back();
      edge_input.emplace_back();
      work.push_back(static_cast<Node>(x));
    }
    return static_cast<Node>(x);
  };
  node(m.initial, u.initial);
  while (!work.empty()) {
    Node v = work.back();
    work.pop_back();
    auto [t, q] = info[v];
    for (Letter i = 0; i < m.inputs.num_letters(); ++i)
      for (State r : u.succ[q][table[i][m.label[t]]]) {
        Node w = node(m.trans[t][i], r);
        g.succ[v].push_back(w);
        edge_input[v].push_back(i);
      }
  }
  ModelCheckResult res;
  res.product_states = info.size();
  Sccs s = tarjan_scc(g);
  std::int64_t bad = -1;
  for (Node v = 0; v < info.size() && bad < 0; ++v)
    if (u.rejecting[info[v].second] && s.nontrivial[s.comp[v]]) bad = v;
  res.accepted = bad < 0;
  if (res.accepted) return res;
  auto bfs = [&](Node from, Node to, bool within) {
    std::vector<std::int64_t> parent(info.size(), -1);
    std::vector<Letter> via(info.size(), 0);
    std::deque<Node> q;
    std::vector<char> seen(info.size(), 0);
    std::vector<Letter> path;
    if (!within && from == to) return path;
    q.push_back(from);
    seen[from] = !within;
    while (!q.empty()) {
      Node v = q.front();
      q.pop_front();
      for (std::size_t e = 0; e < g.succ[v].size(); ++e) {
        Node w = g.succ[v][e];
        if (within && s.comp[w] != s.comp[to]) continue;
        if (seen[w]) continue;
        seen[w] = 1;
        parent[w] = v;
        via[w] = edge_input[v][e];
        if (w == to) {
          for (Node x = to;;) {
            path.push_back(via[x]);
            x = static_cast<Node>(parent[x]);
            if (x == from) break;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        q.push_back(w);
      }
    }
    throw Error("internal: no path in product graph");
  };
  Node target = static_cast<Node>(bad);
  auto prefix = bfs(0, target, false);
  auto loop = bfs(target, target, true);
  res.counterexample = LassoWord{m.inputs, prefix, loop};
  return res;
}

std::optional<MooreMachine> bounded_synthesize(const Uca& u, const Alphabet& inputs, const Alphabet& outputs,
                                               std::size_t machine_bound, std::size_t counter_bound,
                                               SynthStats* stats, const SynthOptions& opts) {
  if (machine_bound == 0) throw Error("machine bound must be at least 1");
  auto table = letter_table(u, inputs, outputs);
  GameCell cell = solve_cell(u, table, inputs, outputs, counter_bound, opts);
  if (stats) {
    stats->game_positions = cell.positions;
    stats->game_budget_exceeded = cell.budget_exceeded;
    stats->game_won = cell.machine.has_value();
    stats->extracted_states = cell.machine ? cell.machine->num_states() : 0;
  }
  return search_cell(u, table, inputs, outputs, machine_bound, counter_bound, cell.machine, cell.lost, stats, opts);
}

SynthesisResult synthesize_with_schedule(const Uca& u, const Alphabet& inputs, const Alphabet& outputs,
                                         const Schedule& schedule, const SynthOptions& opts) {
  auto table = letter_table(u, inputs, outputs);
  SynthesisResult res;
  res.uca_states = u.num_states();
  std::map<std::size_t, GameCell> games;
  for (std::size_t n : schedule.machine_bounds)
    for (std::size_t k : schedule.counter_bounds) {
      auto it = games.find(k);
      if (it == games.end()) it = games.emplace(k, solve_cell(u, table, inputs, outputs, k, opts)).first;
      auto m = search_cell(u, table, inputs, outputs, n, k, it->second.machine, it->second.lost, nullptr, opts);
      res.tried.push_back({n, k, m.has_value()});
      if (m) {
        res.machine = std::move(m);
        res.machine_bound = n;
        res.counter_bound = k;
        res.certificate = uca_model_check(u, *res.machine);
        return res;
      }
    }
  return res;
}

SynthesisResult synthesize_dd(const Formula& phi, const Architecture& arch, const std::string& process,
                              const Schedule& schedule, const SynthOptions& opts) {
  DdUcaStages stages;
  Uca dd = build_dd_uca(phi, arch, process, &stages);
  const Process& p = arch.process(process);
  SynthesisResult res = synthesize_with_schedule(dd, Alphabet(p.inputs), Alphabet(p.outputs), schedule, opts);
  res.stages = stages;
  return res;
}

std::string export_dimacs(const Uca& u, const Alphabet& inputs, const Alphabet& outputs, std::size_t counter_bound,
                          const SynthOptions& opts) {
  auto table = letter_table(u, inputs, outputs);
  CountingGame g =
      build_counting_game(u, table, inputs.num_letters(), outputs.num_letters(), counter_bound, opts.game_budget);
  if (g.budget_exceeded) throw Error("counting game exceeds the position budget");
  // one variable per position: system nodes mean "safe", environment nodes mean "output chosen"
  std::vector<std::vector<long>> clauses;
  auto var = [](Node v) { return static_cast<long>(v) + 1; };
  clauses.push_back({var(0)});
  for (Node v = 0; v < g.arena.size(); ++v) {
    if (g.arena.owner[v] == 0) {
      if (!g.safe[v]) {
        clauses.push_back({-var(v)});
        continue;
      }
      std::vector<long> c{-var(v)};
      for (Node e : g.arena.succ[v]) c.push_back(var(e));
      clauses.push_back(c);
    } else {
      for (Node s : g.arena.succ[v]) clauses.push_back({-var(v), var(s)});
    }
  }
  std::ostringstream out;
  out << "c counting game, bound " << counter_bound << "\np cnf " << g.arena.size() << ' ' << clauses.size() << '\n';
  for (const auto& c : clauses) {
    for (long x : c) out << x << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace ddsynth
