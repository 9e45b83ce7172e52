#include "support.hpp"

#include <functional>
#include <numeric>


namespace testing {

std::string fixture(const std::string& name) { return read_file(std::string(FIXTURE_DIR) + "/" + name); }

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Formula random_formula(Rng& rng, const std::vector<std::string>& props, std::size_t size) {
  if (size <= 1) {
    std::size_t k = pick(rng, 0, props.size() + 1);
    if (k == props.size()) return ltl_true();
    if (k == props.size() + 1) return ltl_false();
    return ltl_atom(props[k]);
  }
  if (size == 2) {
    Formula sub = random_formula(rng, props, 1);
    switch (pick(rng, 0, 3)) {
      case 0: return ltl_not(sub);
      case 1: return ltl_next(sub);
      case 2: return ltl_eventually(sub);
      default: return ltl_globally(sub);
    }
  }
  std::size_t op = pick(rng, 0, 8);
  if (op < 4) {
    Formula sub = random_formula(rng, props, size - 1);
    switch (op) {
      case 0: return ltl_not(sub);
      case 1: return ltl_next(sub);
      case 2: return ltl_eventually(sub);
      default: return ltl_globally(sub);
    }
  }
  std::size_t left = pick(rng, 1, size - 2);
  Formula a = random_formula(rng, props, left), b = random_formula(rng, props, size - 1 - left);
  switch (op) {
    case 4: return ltl_and(a, b);
    case 5: return ltl_or(a, b);
    case 6: return ltl_until(a, b);
    case 7: return ltl_release(a, b);
    default: return ltl_until(a, b);
  }
}

LassoWord random_lasso(Rng& rng, const Alphabet& props, std::size_t max_prefix, std::size_t max_loop) {
  std::vector<Letter> prefix(pick(rng, 0, max_prefix)), loop(pick(rng, 1, max_loop));
  for (auto& l : prefix) l = static_cast<Letter>(pick(rng, 0, props.num_letters() - 1));
  for (auto& l : loop) l = static_cast<Letter>(pick(rng, 0, props.num_letters() - 1));
  return make_lasso(props, prefix, loop);
}

namespace {

Dnf random_dnf(Rng& rng, std::size_t lo, std::size_t hi, std::size_t max_disjuncts, std::size_t max_clause) {
  Dnf d;
  std::size_t n = pick(rng, 1, max_disjuncts);
  for (std::size_t i = 0; i < n; ++i) {
    Clause c;
    std::size_t k = pick(rng, 1, max_clause);
    for (std::size_t j = 0; j < k; ++j) set_insert(c, static_cast<State>(pick(rng, lo, hi)));
    d.push_back(c);
  }
  return canonicalize(d);
}

}  // namespace

Aca random_aca(Rng& rng, const Alphabet& props, std::size_t states, std::size_t max_disjuncts,
               std::size_t max_clause) {
  Aca a;
  a.props = props;
  for (std::size_t q = 0; q < states; ++q) a.add_state("q" + std::to_string(q), coin(rng, 0.4));
  for (std::size_t q = 0; q < states; ++q)
    for (Letter l = 0; l < props.num_letters(); ++l) {
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      if (r < 0.05)
        a.delta[q][l] = dnf_true();
      else if (r < 0.1)
        a.delta[q][l] = dnf_false();
      else
        a.delta[q][l] = random_dnf(rng, 0, states - 1, max_disjuncts, max_clause);
    }
  return a;
}

Aca random_weak_aca(Rng& rng, const Alphabet& props, std::size_t states) {
  std::vector<std::size_t> block(states);
  std::size_t b = 0;
  for (std::size_t q = 0; q < states; ++q) {
    if (q > 0 && coin(rng, 0.5)) ++b;
    block[q] = b;
  }
  std::vector<char> block_marked(b + 1);
  for (auto& m : block_marked) m = coin(rng, 0.5);
  Aca a;
  a.props = props;
  for (std::size_t q = 0; q < states; ++q) a.add_state("q" + std::to_string(q), block_marked[block[q]]);
  for (std::size_t q = 0; q < states; ++q) {
    std::size_t first = q;
    while (first > 0 && block[first - 1] == block[q]) --first;
    for (Letter l = 0; l < props.num_letters(); ++l) {
      double r = std::uniform_real_distribution<double>(0, 1)(rng);
      if (r < 0.05)
        a.delta[q][l] = dnf_true();
      else if (r < 0.1)
        a.delta[q][l] = dnf_false();
      else
        a.delta[q][l] = random_dnf(rng, first, states - 1, 2, 2);
    }
  }
  return a;
}

Uca random_uca(Rng& rng, const Alphabet& props, std::size_t states) {
  Uca u;
  u.props = props;
  for (std::size_t q = 0; q < states; ++q) u.add_state("u" + std::to_string(q), coin(rng, 0.4));
  for (std::size_t q = 0; q < states; ++q)
    for (Letter l = 0; l < props.num_letters(); ++l) {
      StateSet s;
      std::size_t k = pick(rng, 0, 2);
      for (std::size_t j = 0; j < k; ++j) set_insert(s, static_cast<State>(pick(rng, 0, states - 1)));
      u.succ[q][l] = s;
    }
  return u;
}

MooreMachine random_machine(Rng& rng, const Alphabet& inputs, const Alphabet& outputs, std::size_t max_states) {
  MooreMachine m;
  m.inputs = inputs;
  m.outputs = outputs;
  std::size_t n = pick(rng, 1, max_states);
  m.label.resize(n);
  m.trans.assign(n, std::vector<State>(inputs.num_letters()));
  for (auto& l : m.label) l = static_cast<Letter>(pick(rng, 0, outputs.num_letters() - 1));
  for (auto& row : m.trans)
    for (auto& t : row) t = static_cast<State>(pick(rng, 0, n - 1));
  return m;
}

bool ltl_oracle(const Formula& f, const LassoWord& w) {
  const std::size_t period = w.period();
  // positions beyond the prefix repeat with the loop length, so one period of lookahead decides U
  std::function<bool(const Formula&, std::size_t)> ev = [&](const Formula& g, std::size_t i) -> bool {
    auto fold = [&](std::size_t j) {
      return j < w.prefix.size() ? j : w.prefix.size() + (j - w.prefix.size()) % w.loop.size();
    };
    i = fold(i);
    switch (g->op) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Atom: return (w.at(i) >> *w.props.index_of(g->atom)) & 1U;
      case Op::Not: return !ev(g->lhs, i);
      case Op::And: return ev(g->lhs, i) && ev(g->rhs, i);
      case Op::Or: return ev(g->lhs, i) || ev(g->rhs, i);
      case Op::Next: return ev(g->lhs, i + 1);
      case Op::Until:
        for (std::size_t j = i; j <= i + period; ++j) {
          if (ev(g->rhs, j)) return true;
          if (!ev(g->lhs, j)) return false;
        }
        return false;
      case Op::Release:
        for (std::size_t j = i; j <= i + period; ++j) {
          if (!ev(g->rhs, j)) return false;
          if (ev(g->lhs, j)) return true;
        }
        return true;
      case Op::Eventually:
        for (std::size_t j = i; j <= i + period; ++j)
          if (ev(g->lhs, j)) return true;
        return false;
      case Op::Globally:
        for (std::size_t j = i; j <= i + period; ++j)
          if (!ev(g->lhs, j)) return false;
        return true;
    }
    return false;
  };
  return ev(f, 0);
}

bool aca_bruteforce(const Aca& a, const LassoWord& in) {
  LassoWord w = a.props == in.props ? in : reindex(in, a.props);
  const std::size_t n = a.num_states(), period = w.period();
  const std::size_t nodes = n * period;
  auto id = [&](State q, std::size_t i) { return q * period + i; };
  std::vector<std::size_t> choice(nodes, 0), options(nodes);
  for (State q = 0; q < n; ++q)
    for (std::size_t i = 0; i < period; ++i) options[id(q, i)] = a.delta[q][w.at(i)].size();
  auto accepting_run = [&]() {
    // reachable nodes of the positional run, then a rejecting node on a cycle rejects
    std::vector<std::vector<std::size_t>> succ(nodes);
    std::vector<char> seen(nodes, 0);
    std::vector<std::size_t> stack{id(a.initial, 0)};
    seen[stack[0]] = 1;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      State q = static_cast<State>(v / period);
      std::size_t i = v % period;
      if (options[v] == 0) return false;
      for (State r : a.delta[q][w.at(i)][choice[v]]) {
        std::size_t u = id(r, w.next(i));
        succ[v].push_back(u);
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    for (std::size_t v = 0; v < nodes; ++v) {
      if (!seen[v] || !a.marked[v / period]) continue;
      std::vector<char> vis(nodes, 0);
      std::vector<std::size_t> st(succ[v].begin(), succ[v].end());
      while (!st.empty()) {
        std::size_t x = st.back();
        st.pop_back();
        if (x == v) return false;
        if (vis[x]) continue;
        vis[x] = 1;
        for (std::size_t y : succ[x]) st.push_back(y);
      }
    }
    return true;
  };
  while (true) {
    if (accepting_run()) return true;
    std::size_t k = 0;
    while (k < nodes) {
      if (options[k] > 0 && choice[k] + 1 < options[k]) {
        ++choice[k];
        break;
      }
      choice[k] = 0;
      ++k;
    }
    if (k == nodes) return false;
  }
}

std::vector<LassoWord> same_shape_extensions(const LassoWord& w, const Alphabet& full) {
  LetterMap to_full(w.props, full);
  std::vector<Letter> hidden_bits;
  for (std::size_t k = 0; k < full.size(); ++k)
    if (!w.props.contains(full.name(k))) hidden_bits.push_back(Letter{1} << k);
  const std::size_t period = w.period(), choices = std::size_t{1} << hidden_bits.size();
  std::size_t total = 1;
  for (std::size_t j = 0; j < period; ++j) total *= choices;
  std::vector<LassoWord> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Letter> letters;
    std::size_t c = code;
    for (std::size_t j = 0; j < period; ++j) {
      Letter l = to_full(w.at(j));
      std::size_t pick = c % choices;
      c /= choices;
      for (std::size_t b = 0; b < hidden_bits.size(); ++b)
        if ((pick >> b) & 1U) l |= hidden_bits[b];
      letters.push_back(l);
    }
    out.push_back(make_lasso(full, {letters.begin(), letters.begin() + static_cast<long>(w.prefix.size())},
                             {letters.begin() + static_cast<long>(w.prefix.size()), letters.end()}));
  }
  return out;
}

std::optional<LassoWord> rejected_extension(const Uca& u, const LassoWord& w) {
  LetterMap to_visible(u.props, w.props);
  const std::size_t period = w.period();
  struct Edge {
    std::size_t to;
    Letter letter;
  };
  const std::size_t n = u.num_states() * period;
  std::vector<std::vector<Edge>> succ(n);
  for (State q = 0; q < u.num_states(); ++q)
    for (std::size_t i = 0; i < period; ++i)
      for (Letter l = 0; l < u.props.num_letters(); ++l)
        if (to_visible(l) == w.at(i))
          for (State r : u.succ[q][l]) succ[q * period + i].push_back({r * period + w.next(i), l});
  auto path = [&](std::size_t from, std::size_t to, bool nonempty) -> std::optional<std::vector<Letter>> {
    std::vector<std::int64_t> prev(n, -1);
    std::vector<Letter> via(n);
    std::vector<std::size_t> queue;
    for (const auto& e : nonempty ? succ[from] : std::vector<Edge>{}) {
      if (prev[e.to] < 0) {
        prev[e.to] = static_cast<std::int64_t>(from);
        via[e.to] = e.letter;
        queue.push_back(e.to);
      }
    }
    if (!nonempty) {
      if (from == to) return std::vector<Letter>{};
      prev[from] = static_cast<std::int64_t>(from);
      queue.push_back(from);
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
      std::size_t v = queue[k];
      if (v == to && (nonempty || k > 0)) break;
      for (const auto& e : succ[v])
        if (prev[e.to] < 0) {
          prev[e.to] = static_cast<std::int64_t>(v);
          via[e.to] = e.letter;
          queue.push_back(e.to);
        }
    }
    if (prev[to] < 0) return std::nullopt;
    std::vector<Letter> letters;
    std::size_t v = to;
    do {
      letters.push_back(via[v]);
      v = static_cast<std::size_t>(prev[v]);
    } while (v != from);
    if (!nonempty && letters.size() == 1 && to == from) return std::vector<Letter>{};
    return std::vector<Letter>(letters.rbegin(), letters.rend());
  };
  std::size_t start = u.initial * period;
  for (std::size_t v = 0; v < n; ++v) {
    if (!u.rejecting[v / period]) continue;
    auto cycle = path(v, v, true);
    if (!cycle) continue;
    auto stem = path(start, v, false);
    if (!stem) continue;
    return make_lasso(u.props, *stem, *cycle);
  }
  return std::nullopt;
}

}  // namespace testing
