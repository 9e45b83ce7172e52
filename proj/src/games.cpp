#include "ddsynth/games.hpp"

namespace ddsynth {

namespace {

using Preds = std::vector<std::vector<Node>>;

Preds predecessors(const Arena& a) {
  Preds p(a.size());
  for (Node v = 0; v < a.size(); ++v)
    for (Node w : a.succ[v]) p[w].push_back(v);
  return p;
}

Attractor attract(const Arena& a, const Preds& pred, const std::vector<char>& alive,
                  const std::vector<char>& target, std::uint8_t player) {
  const std::size_t n = a.size();
  Attractor out{std::vector<char>(n, 0), std::vector<std::int64_t>(n, kNoMove)};
  std::vector<std::uint32_t> remaining(n, 0);
  std::vector<Node> work;
  for (Node v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (Node w : a.succ[v])
      if (alive[w]) ++remaining[v];
    if (target[v]) {
      out.in[v] = 1;
      work.push_back(v);
    }
  }
  // dead ends of the other player are attracted vacuously
  for (Node v = 0; v < n; ++v)
    if (alive[v] && !out.in[v] && a.owner[v] != player && remaining[v] == 0) {
      out.in[v] = 1;
      work.push_back(v);
    }
  while (!work.empty()) {
    Node w = work.back();
    work.pop_back();
    for (Node v : pred[w]) {
      if (!alive[v] || out.in[v]) continue;
      if (a.owner[v] == player) {
        out.in[v] = 1;
        out.move[v] = w;
        work.push_back(v);
      } else if (--remaining[v] == 0) {
        out.in[v] = 1;
        work.push_back(v);
      }
    }
  }
  return out;
}

BuchiSolution truncate(BuchiSolution s, const Arena& input) {
  const std::size_t n = input.size();
  s.win.resize(n);
  s.buchi_strategy.resize(n);
  s.opponent_strategy.resize(n);
  for (Node v = 0; v < n; ++v) {
    if (input.succ[v].empty()) {
      s.buchi_strategy[v] = kNoMove;
      s.opponent_strategy[v] = kNoMove;
    }
  }
  return s;
}

}  // namespace

std::size_t Arena::num_edges() const {
  std::size_t e = 0;
  for (const auto& s : succ) e += s.size();
  return e;
}

Attractor attractor(const Arena& a, const std::vector<char>& alive, const std::vector<char>& target,
                    std::uint8_t player) {
  return attract(a, predecessors(a), alive, target, player);
}

BuchiSolution solve_buchi(const Arena& input, std::uint8_t player, const std::vector<char>& acc_in) {
  const std::uint8_t opp = 1 - player;
  // dead ends move to a sink that is losing for their owner
  Arena a = input;
  std::vector<char> accepting = acc_in;
  const std::size_t orig = input.size();
  Node lose_sink = a.add_node(player), win_sink = a.add_node(player);
  a.succ[lose_sink] = {lose_sink};
  a.succ[win_sink] = {win_sink};
  accepting.push_back(0);
  accepting.push_back(1);
  for (Node v = 0; v < orig; ++v)
    if (a.succ[v].empty()) a.succ[v] = {a.owner[v] == player ? lose_sink : win_sink};
  const std::size_t n = a.size();
  Preds pred = predecessors(a);
  std::vector<char> alive(n, 1);
  BuchiSolution out{std::vector<char>(n, 0), std::vector<std::int64_t>(n, kNoMove),
                    std::vector<std::int64_t>(n, kNoMove)};
  for (;;) {
    std::vector<char> goal(n, 0);
    for (Node v = 0; v < n; ++v) goal[v] = alive[v] && accepting[v];
    Attractor reach = attract(a, pred, alive, goal, player);
    std::vector<char> trap(n, 0);
    bool any = false;
    for (Node v = 0; v < n; ++v)
      if (alive[v] && !reach.in[v]) {
        trap[v] = 1;
        any = true;
      }
    if (!any) {
      for (Node v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        out.win[v] = 1;
        if (a.owner[v] != player) continue;
        if (reach.move[v] != kNoMove) {
          out.buchi_strategy[v] = reach.move[v];
        } else {
          for (Node w : a.succ[v])
            if (alive[w]) {
              out.buchi_strategy[v] = w;
              break;
            }
        }
      }
      return truncate(out, input);
    }
    Attractor lose = attract(a, pred, alive, trap, opp);
    for (Node v = 0; v < n; ++v) {
      if (!lose.in[v]) continue;
      if (a.owner[v] == opp) {
        if (lose.move[v] != kNoMove) {
          out.opponent_strategy[v] = lose.move[v];
        } else {
          for (Node w : a.succ[v])
            if (alive[w] && trap[w]) {
              out.opponent_strategy[v] = w;
              break;
            }
        }
      }
      alive[v] = 0;
    }
  }
}

SafetySolution solve_safety(const Arena& a, std::uint8_t player, const std::vector<char>& safe) {
  const std::size_t n = a.size();
  Preds pred = predecessors(a);
  std::vector<char> alive(n, 1), bad(n, 0);
  for (Node v = 0; v < n; ++v) bad[v] = !safe[v];
  Attractor lose = attract(a, pred, alive, bad, 1 - player);
  SafetySolution out{std::vector<char>(n, 0), std::vector<std::int64_t>(n, kNoMove)};
  for (Node v = 0; v < n; ++v) {
    if (lose.in[v]) continue;
    out.win[v] = 1;
    if (a.owner[v] != player) continue;
    for (Node w : a.succ[v])
      if (!lose.in[w]) {
        out.strategy[v] = w;
        break;
      }
  }
  return out;
}

}  // namespace ddsynth
