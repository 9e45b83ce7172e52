#pragma once

#include <cstdint>
#include <vector>

namespace ddsynth {

using Node = std::uint32_t;
constexpr std::int64_t kNoMove = -1;

/// Directed graph with successor lists.
struct Graph {
  std::vector<std::vector<Node>> succ;
  std::size_t size() const { return succ.size(); }
};

/// Tarjan SCC; component ids are in reverse topological order.
struct Sccs {
  std::vector<std::uint32_t> comp;
  std::uint32_t count = 0;
  /// Component has a cycle (more than one node or a self-loop).
  std::vector<char> nontrivial;
};
Sccs tarjan_scc(const Graph& g);

std::vector<char> reachable_from(const Graph& g, const std::vector<Node>& roots);

/// Two-player game arena; a player who cannot move loses.
struct Arena {
  std::vector<std::uint8_t> owner;
  std::vector<std::vector<Node>> succ;
  std::size_t size() const { return owner.size(); }
  std::size_t num_edges() const;
  Node add_node(std::uint8_t player) {
    owner.push_back(player);
    succ.emplace_back();
    return static_cast<Node>(owner.size() - 1);
  }
};

struct Attractor {
  std::vector<char> in;
  std::vector<std::int64_t> move;
};

/// Attractor of `target` for `player` inside the subgame `alive`.
Attractor attractor(const Arena& a, const std::vector<char>& alive, const std::vector<char>& target,
                    std::uint8_t player);

struct BuchiSolution {
  std::vector<char> win;  ///< winning region of the Buchi player
  std::vector<std::int64_t> buchi_strategy;
  std::vector<std::int64_t> opponent_strategy;
};

/// `player` wants to visit `accepting` infinitely often.
BuchiSolution solve_buchi(const Arena& a, std::uint8_t player, const std::vector<char>& accepting);

/// `player` wants to stay in `safe` forever.
struct SafetySolution {
  std::vector<char> win;
  std::vector<std::int64_t> strategy;
};
SafetySolution solve_safety(const Arena& a, std::uint8_t player, const std::vector<char>& safe);

}  // namespace ddsynth
