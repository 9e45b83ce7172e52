#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddsynth/automata.hpp"
#include "ddsynth/games.hpp"
#include "ddsynth/moore.hpp"

namespace ddsynth {

constexpr std::uint8_t kDuplicator = 0;
constexpr std::uint8_t kSpoiler = 1;

enum class Layer : std::uint8_t { SpoilerExist, DuplicatorExist, SpoilerUniv, DuplicatorUniv };

struct DdPosition {
  Layer layer;
  State p;               ///< alternative state
  State q;               ///< dominant state
  bool pending;          ///< a rejecting dominant visit is unmatched
  std::uint32_t c_alt;   ///< chosen disjunct for p
  std::uint32_t c_dom;   ///< chosen disjunct for q
  State q_next;          ///< chosen dominant successor
  std::uint32_t round;   ///< folded round
};

struct DdGame {
  Aca aca;  ///< completed automaton the arena is built on
  LassoWord alt;
  LassoWord dom;
  Arena arena;
  std::vector<DdPosition> positions;
  std::vector<char> accepting;  ///< round boundaries without pending visit
  Node initial = 0;
};

/// State pair entered at a round boundary of a witness play.
struct RoundPair {
  State p;
  State q;
  bool pending;
};

struct DdResult {
  bool duplicator_wins = false;
  std::size_t num_positions = 0;
  std::size_t num_edges = 0;
  std::vector<std::int64_t> duplicator_strategy;
  std::vector<std::int64_t> spoiler_strategy;
  /// Round boundaries of a play consistent with the winner's strategy, as a lasso.
  std::vector<RoundPair> witness_prefix;
  std::vector<RoundPair> witness_loop;
  /// First round with a rejecting dominant state never matched afterwards.
  std::optional<std::size_t> unmatched_round;
};

Layer layer_of(const DdGame& g, Node v);
DdGame build_dd_game(const Aca& a, const LassoWord& sigma_alt, const LassoWord& sigma_dom);
DdResult solve_dd_game(const DdGame& g);
bool dd_pair_on_lasso(const Aca& a, const MooreMachine& s, const MooreMachine& t, const LassoWord& gamma,
                      DdResult* detail = nullptr);
std::string format_witness(const DdGame& g, const DdResult& r);
std::string dd_game_to_dot(const DdGame& g, const DdResult& r);

/// Pending-marker update applied on entering a pair.
bool theta_pending(bool p_rejecting, bool q_rejecting, bool pending);

}  // namespace ddsynth
