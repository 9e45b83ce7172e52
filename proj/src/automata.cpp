#include <algorithm>
#include <functional>
#include <unordered_map>

#include "ddsynth/automata.hpp"
#include "ddsynth/games.hpp"

namespace ddsynth {

State Alternating::add_state(std::string name, bool mark) {
  names.push_back(std::move(name));
  marked.push_back(mark);
  delta.emplace_back(props.num_letters());
  return static_cast<State>(names.size() - 1);
}

State Uca::add_state(std::string name, bool rej) {
  names.push_back(std::move(name));
  rejecting.push_back(rej);
  succ.emplace_back(props.num_letters());
  return static_cast<State>(names.size() - 1);
}

Aba ltl_to_aba(const Formula& f, const Alphabet& props) {
  if (!is_nnf(f)) throw Error("ltl_to_aba expects a formula in negation normal form");
  for (const auto& a : atoms(f))
    if (!props.contains(a)) throw AlphabetMismatch("atom '" + a + "' not in alphabet");
  Aba b;
  b.props = props;
  std::unordered_map<std::string, State> index;
  std::vector<Formula> formulas;
  auto state_of = [&](const Formula& g) {
    std::string key = to_string(g);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    bool acc = g->op == Op::Release || g->op == Op::Globally;
    State s = b.add_state(key, acc);
    index.emplace(key, s);
    formulas.push_back(g);
    return s;
  };
  std::function<Dnf(const Formula&, Letter)> tr = [&](const Formula& g, Letter l) -> Dnf {
    switch (g->op) {
      case Op::True: return dnf_true();
      case Op::False: return dnf_false();
      case Op::Atom: return (l >> *props.index_of(g->atom) & 1) ? dnf_true() : dnf_false();
      case Op::Not: return (l >> *props.index_of(g->lhs->atom) & 1) ? dnf_false() : dnf_true();
      case Op::And: return dnf_and(tr(g->lhs, l), tr(g->rhs, l));
      case Op::Or: return dnf_or(tr(g->lhs, l), tr(g->rhs, l));
      case Op::Next: return dnf_atom(state_of(g->lhs));
      case Op::Until: return dnf_or(tr(g->rhs, l), dnf_and(tr(g->lhs, l), dnf_atom(state_of(g))));
      case Op::Release: return dnf_and(tr(g->rhs, l), dnf_or(tr(g->lhs, l), dnf_atom(state_of(g))));
      case Op::Eventually: return dnf_or(tr(g->lhs, l), dnf_atom(state_of(g)));
      case Op::Globally: return dnf_and(tr(g->lhs, l), dnf_atom(state_of(g)));
    }
    return dnf_false();
  };
  b.initial = state_of(f);
  for (std::size_t s = 0; s < formulas.size(); ++s) {
    Formula g = formulas[s];
    for (Letter l = 0; l < props.num_letters(); ++l) {
      Dnf d = tr(g, l);
      b.delta[s][l] = std::move(d);
    }
  }
  return b;
}

namespace {

template <class To, class From>
To dual_of(const From& a) {
  To out;
  out.props = a.props;
  out.names = a.names;
  out.initial = a.initial;
  out.marked = a.marked;
  out.delta = a.delta;
  for (auto& row : out.delta)
    for (auto& d : row) d = dnf_dual(d);
  return out;
}

Graph state_graph(const Alternating& a) {
  Graph g;
  g.succ.resize(a.num_states());
  for (State q = 0; q < a.num_states(); ++q) {
    StateSet s;
    for (const auto& d : a.delta[q])
      for (const auto& c : d)
        for (State r : c) set_insert(s, r);
    g.succ[q] = s;
  }
  return g;
}

}  // namespace

Aca dualize(const Aba& b) { return dual_of<Aca>(b); }
Aba dualize(const Aca& a) { return dual_of<Aba>(a); }

Aca ltl_to_aca(const Formula& f, const Alphabet& props) { return dualize(ltl_to_aba(negate_nnf(f), props)); }

Membership aca_accepts_lasso(const Aca& a, const LassoWord& w) {
  if (!a.props.same_set(w.props)) throw AlphabetMismatch("lasso alphabet differs from automaton alphabet");
  LassoWord word = a.props == w.props ? w : reindex(w, a.props);
  const std::size_t n = word.period();
  // Eve (0) owns (q,pos) and picks a disjunct; Adam (1) owns (q,pos,d) and picks a state.
  Arena arena;
  std::vector<char> rejecting;
  std::vector<std::pair<State, std::size_t>> info;
  std::vector<std::int64_t> eve_id(a.num_states() * n, -1);
  std::vector<Node> work;
  auto eve = [&](State q, std::size_t pos) {
    auto& id = eve_id[q * n + pos];
    if (id < 0) {
      id = arena.add_node(0);
      rejecting.push_back(a.marked[q]);
      info.push_back({q, pos});
      work.push_back(static_cast<Node>(id));
    }
    return static_cast<Node>(id);
  };
  Node root = eve(a.initial, 0);
  while (!work.empty()) {
    Node v = work.back();
    work.pop_back();
    auto [q, pos] = info[v];
    const Dnf& d = a.delta[q][word.at(pos)];
    for (const auto& c : d) {
      Node u = arena.add_node(1);
      rejecting.push_back(0);
      info.push_back({q, pos});
      arena.succ[v].push_back(u);
      std::vector<Node> targets;
      for (State r : c) targets.push_back(eve(r, word.next(pos)));
      arena.succ[u] = std::move(targets);
    }
  }
  BuchiSolution sol = solve_buchi(arena, 1, rejecting);
  Membership m;
  m.accepted = !sol.win[root];
  if (!m.accepted) return m;
  RunTreeCertificate cert;
  cert.period = n;
  cert.loop_start = word.prefix.size();
  std::vector<char> seen(arena.size(), 0);
  std::vector<Node> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    auto key = info[v];
    Node u = static_cast<Node>(sol.opponent_strategy[v]);
    auto idx = std::find(arena.succ[v].begin(), arena.succ[v].end(), u) - arena.succ[v].begin();
    cert.choice[key] = static_cast<std::size_t>(idx);
    auto& out = cert.edges[key];
    for (Node t : arena.succ[u]) {
      out.push_back(info[t]);
      if (!seen[t]) {
        seen[t] = 1;
        stack.push_back(t);
      }
    }
  }
  m.certificate = std::move(cert);
  return m;
}

bool check_certificate(const Aca& a, const LassoWord& w, const RunTreeCertificate& c) {
  LassoWord word = a.props == w.props ? w : reindex(w, a.props);
  if (c.period != word.period()) return false;
  using Key = std::pair<State, std::size_t>;
  if (!c.choice.count(Key{a.initial, 0})) return false;
  std::map<Key, Node> id;
  for (const auto& [k, _] : c.choice) id.emplace(k, static_cast<Node>(id.size()));
  Graph g;
  g.succ.resize(id.size());
  for (const auto& [k, ci] : c.choice) {
    const Dnf& d = a.delta[k.first][word.at(k.second)];
    if (ci >= d.size()) return false;
    auto it = c.edges.find(k);
    std::vector<Key> expect;
    for (State r : d[ci]) expect.push_back({r, word.next(k.second)});
    std::vector<Key> got = it == c.edges.end() ? std::vector<Key>{} : it->second;
    if (got != expect) return false;
    for (const auto& t : got) {
      auto jt = id.find(t);
      if (jt == id.end()) return false;
      g.succ[id[k]].push_back(jt->second);
    }
  }
  Sccs s = tarjan_scc(g);
  for (const auto& [k, v] : id)
    if (a.marked[k.first] && s.nontrivial[s.comp[v]]) return false;
  return true;
}

bool uca_accepts_lasso(const Uca& u, const LassoWord& w) {
  if (!u.props.same_set(w.props)) throw AlphabetMismatch("lasso alphabet differs from automaton alphabet");
  LassoWord word = u.props == w.props ? w : reindex(w, u.props);
  const std::size_t n = word.period();
  std::vector<std::int64_t> id(u.num_states() * n, -1);
  std::vector<std::pair<State, std::size_t>> info;
  Graph g;
  std::vector<Node> work;
  auto node = [&](State q, std::size_t pos) {
    auto& i = id[q * n + pos];
    if (i < 0) {
      i = static_cast<std::int64_t>(info.size());
      info.push_back({q, pos});
      g.succ.emplace_back();
      work.push_back(static_cast<Node>(i));
    }
    return static_cast<Node>(i);
  };
  node(u.initial, 0);
  while (!work.empty()) {
    Node v = work.back();
    work.pop_back();
    auto [q, pos] = info[v];
    for (State r : u.succ[q][word.at(pos)]) {
      Node t = node(r, word.next(pos));
      g.succ[v].push_back(t);
    }
  }
  Sccs s = tarjan_scc(g);
  for (Node v = 0; v < info.size(); ++v)
    if (u.rejecting[info[v].first] && s.nontrivial[s.comp[v]]) return false;
  return true;
}

Aca prune_noncycle_rejecting(const Aca& a) {
  Aca out = a;
  Sccs s = tarjan_scc(state_graph(a));
  for (State q = 0; q < a.num_states(); ++q)
    if (out.marked[q] && !s.nontrivial[s.comp[q]]) out.marked[q] = 0;
  return out;
}

Aca prune_unreachable(const Aca& a, std::vector<State>* kept) {
  auto seen = reachable_from(state_graph(a), {a.initial});
  std::vector<State> rename(a.num_states(), 0), keep;
  for (State q = 0; q < a.num_states(); ++q)
    if (seen[q]) {
      rename[q] = static_cast<State>(keep.size());
      keep.push_back(q);
    }
  Aca out;
  out.props = a.props;
  for (State q : keep) {
    out.add_state(a.names[q], a.marked[q]);
    for (Letter l = 0; l < a.props.num_letters(); ++l) out.delta.back()[l] = dnf_map(a.delta[q][l], rename);
  }
  out.initial = rename[a.initial];
  if (kept) *kept = keep;
  return out;
}

Aca complete_aca(const Aca& a) {
  bool need_top = false, need_bot = false;
  for (const auto& row : a.delta)
    for (const auto& d : row) {
      if (is_false(d)) need_bot = true;
      for (const auto& c : d)
        if (c.empty()) need_top = true;
    }
  Aca out = a;
  State top = 0, bot = 0;
  if (need_top) {
    top = out.add_state("top", false);
    for (auto& d : out.delta[top]) d = dnf_atom(top);
  }
  if (need_bot) {
    bot = out.add_state("bot", true);
    for (auto& d : out.delta[bot]) d = dnf_atom(bot);
  }
  for (State q = 0; q < a.num_states(); ++q)
    for (auto& d : out.delta[q]) {
      if (is_false(d)) d = dnf_atom(bot);
      for (auto& c : d)
        if (c.empty()) c = {top};
      d = canonicalize(std::move(d));
    }
  return out;
}

bool is_weak(const Aca& a) {
  Sccs s = tarjan_scc(state_graph(a));
  std::vector<int> kind(s.count, -1);
  for (State q = 0; q < a.num_states(); ++q) {
    auto c = s.comp[q];
    if (!s.nontrivial[c]) continue;
    if (kind[c] < 0) kind[c] = a.marked[q];
    else if (kind[c] != a.marked[q]) return false;
  }
  return true;
}

Aca complement_weak(const Aca& a) {
  if (!is_weak(a)) throw Error("complement_weak: automaton is not weak");
  Aca out = a;
  for (auto& row : out.delta)
    for (auto& d : row) d = dnf_dual(d);
  for (auto& m : out.marked) m = !m;
  return out;
}

Aca reindex(const Aca& a, const Alphabet& props) {
  if (!a.props.same_set(props)) throw AlphabetMismatch("reindex needs the same propositions");
  LetterMap map(props, a.props);
  Aca out = a;
  out.props = props;
  for (State q = 0; q < a.num_states(); ++q)
    for (Letter l = 0; l < props.num_letters(); ++l) out.delta[q][l] = a.delta[q][map(l)];
  return out;
}

Uca reindex(const Uca& u, const Alphabet& props) {
  if (!u.props.same_set(props)) throw AlphabetMismatch("reindex needs the same propositions");
  LetterMap map(props, u.props);
  Uca out = u;
  out.props = props;
  for (State q = 0; q < u.num_states(); ++q)
    for (Letter l = 0; l < props.num_letters(); ++l) out.succ[q][l] = u.succ[q][map(l)];
  return out;
}

}  // namespace ddsynth
