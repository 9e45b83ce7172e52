#include <map>
#include <sstream>

#include "ddsynth/dd_game.hpp"

namespace ddsynth {

bool theta_pending(bool p_rejecting, bool q_rejecting, bool pending) {
  if (!p_rejecting && q_rejecting && !pending) return true;
  if (!p_rejecting && pending) return true;
  return false;
}

Layer layer_of(const DdGame& g, Node v) { return g.positions[v].layer; }

DdGame build_dd_game(const Aca& a, const LassoWord& sigma_alt, const LassoWord& sigma_dom) {
  if (!a.props.same_set(sigma_alt.props) || !a.props.same_set(sigma_dom.props))
    throw AlphabetMismatch("game words must be over the automaton alphabet");
  DdGame g;
  g.aca = complete_aca(a);
  auto [x, y] = align(reindex(sigma_alt, a.props), reindex(sigma_dom, a.props));
  g.alt = std::move(x);
  g.dom = std::move(y);
  const Aca& A = g.aca;
  using Key = std::tuple<std::uint8_t, State, State, bool, std::uint32_t, std::uint32_t, State, std::uint32_t>;
  std::map<Key, Node> index;
  std::vector<Node> work;
  auto get = [&](const DdPosition& pos) {
    Key k{static_cast<std::uint8_t>(pos.layer), pos.p, pos.q, pos.pending, pos.c_alt, pos.c_dom, pos.q_next, pos.round};
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    bool dup = pos.layer == Layer::DuplicatorExist || pos.layer == Layer::DuplicatorUniv;
    Node v = g.arena.add_node(dup ? kDuplicator : kSpoiler);
    g.positions.push_back(pos);
    g.accepting.push_back(pos.layer == Layer::SpoilerExist && !pos.pending);
    index.emplace(k, v);
    work.push_back(v);
    return v;
  };
  g.initial = get({Layer::SpoilerExist, A.initial, A.initial, false, 0, 0, 0, 0});
  while (!work.empty()) {
    Node v = work.back();
    work.pop_back();
    DdPosition pos = g.positions[v];
    const Dnf& dp = A.delta[pos.p][g.alt.at(pos.round)];
    const Dnf& dq = A.delta[pos.q][g.dom.at(pos.round)];
    std::vector<Node> out;
    switch (pos.layer) {
      case Layer::SpoilerExist:
        for (std::uint32_t c = 0; c < dp.size(); ++c) {
          DdPosition n = pos;
          n.layer = Layer::DuplicatorExist;
          n.c_alt = c;
          out.push_back(get(n));
        }
        break;
      case Layer::DuplicatorExist:
        for (std::uint32_t c = 0; c < dq.size(); ++c) {
          DdPosition n = pos;
          n.layer = Layer::SpoilerUniv;
          n.c_dom = c;
          out.push_back(get(n));
        }
        break;
      case Layer::SpoilerUniv:
        for (State r : dq[pos.c_dom]) {
          DdPosition n = pos;
          n.layer = Layer::DuplicatorUniv;
          n.q_next = r;
          out.push_back(get(n));
        }
        break;
      case Layer::DuplicatorUniv:
        for (State r : dp[pos.c_alt]) {
          bool pending = theta_pending(A.marked[r], A.marked[pos.q_next], pos.pending);
          out.push_back(get({Layer::SpoilerExist, r, pos.q_next, pending, 0, 0, 0,
                             static_cast<std::uint32_t>(g.alt.next(pos.round))}));
        }
        break;
    }
    g.arena.succ[v] = std::move(out);
  }
  return g;
}

DdResult solve_dd_game(const DdGame& g) {
  BuchiSolution sol = solve_buchi(g.arena, kDuplicator, g.accepting);
  DdResult r;
  r.duplicator_wins = sol.win[g.initial];
  r.num_positions = g.arena.size();
  r.num_edges = g.arena.num_edges();
  r.duplicator_strategy = sol.buchi_strategy;
  r.spoiler_strategy = sol.opponent_strategy;
  // follow the winner's strategy, the loser takes the first move
  std::map<Node, std::size_t> seen;
  std::vector<Node> play;
  Node v = g.initial;
  while (!seen.count(v)) {
    seen[v] = play.size();
    play.push_back(v);
    const auto& strat = g.arena.owner[v] == kDuplicator ? sol.buchi_strategy : sol.opponent_strategy;
    bool winner_moves = (g.arena.owner[v] == kDuplicator) == r.duplicator_wins;
    if (winner_moves && strat[v] != kNoMove) v = static_cast<Node>(strat[v]);
    else v = g.arena.succ[v].front();
  }
  std::size_t loop_at = seen[v];
  for (std::size_t i = 0; i < play.size(); ++i) {
    const auto& pos = g.positions[play[i]];
    if (pos.layer != Layer::SpoilerExist) continue;
    (i < loop_at ? r.witness_prefix : r.witness_loop).push_back({pos.p, pos.q, pos.pending});
  }
  const auto& F = g.aca.marked;
  bool loop_matches = false;
  for (const auto& rp : r.witness_loop) loop_matches = loop_matches || F[rp.p];
  if (!loop_matches) {
    std::vector<RoundPair> all = r.witness_prefix;
    all.insert(all.end(), r.witness_loop.begin(), r.witness_loop.end());
    std::optional<std::size_t> last_p;
    for (std::size_t j = 0; j < all.size(); ++j)
      if (F[all[j].p]) last_p = j;
    for (std::size_t j = last_p ? *last_p + 1 : 0; j < all.size(); ++j)
      if (F[all[j].q]) {
        r.unmatched_round = j;
        break;
      }
  }
  return r;
}

bool dd_pair_on_lasso(const Aca& a, const MooreMachine& s, const MooreMachine& t, const LassoWord& gamma,
                      DdResult* detail) {
  DdGame g = build_dd_game(a, computation(t, gamma), computation(s, gamma));
  DdResult r = solve_dd_game(g);
  if (detail) *detail = r;
  return r.duplicator_wins;
}

std::string format_witness(const DdGame& g, const DdResult& r) {
  auto pair = [&](const RoundPair& x) { return "(" + g.aca.names[x.p] + "," + g.aca.names[x.q] + ")"; };
  std::string out;
  for (const auto& x : r.witness_prefix) out += pair(x);
  out += "[";
  for (const auto& x : r.witness_loop) out += pair(x);
  return out + "]^w";
}

std::string dd_game_to_dot(const DdGame& g, const DdResult& r) {
  BuchiSolution sol = solve_buchi(g.arena, kDuplicator, g.accepting);
  std::ostringstream out;
  out << "digraph ddgame {\n";
  const char* names[] = {"S_E", "D_E", "S_A", "D_A"};
  for (Node v = 0; v < g.arena.size(); ++v) {
    const auto& p = g.positions[v];
    out << "  v" << v << " [label=\"" << names[static_cast<int>(p.layer)] << " " << g.aca.names[p.p] << ","
        << g.aca.names[p.q] << (p.pending ? ",bot" : ",top") << " r" << p.round << "\", shape="
        << (g.arena.owner[v] == kDuplicator ? "box" : "ellipse") << ", style=filled, fillcolor="
        << (sol.win[v] ? "palegreen" : "lightpink") << (v == g.initial ? ", penwidth=3" : "") << "];\n";
  }
  for (Node v = 0; v < g.arena.size(); ++v)
    for (Node w : g.arena.succ[v]) out << "  v" << v << " -> v" << w << ";\n";
  out << "  label=\"" << (r.duplicator_wins ? "Duplicator wins" : "Spoiler wins") << "\";\n}\n";
  return out.str();
}

}  // namespace ddsynth
