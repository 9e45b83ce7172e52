#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddsynth/mh_projection.hpp"
#include "ddsynth/moore.hpp"

namespace ddsynth {

struct ModelCheckResult {
  bool accepted = false;
  /// Input word whose computation the automaton rejects.
  std::optional<LassoWord> counterexample;
  std::size_t product_states = 0;
};

/// Checks that u accepts the computation of m on every input word.
ModelCheckResult uca_model_check(const Uca& u, const MooreMachine& m);

struct SynthOptions {
  std::size_t game_budget = 400'000;
  std::size_t search_budget = 5'000'000;
};

struct SynthStats {
  std::size_t game_positions = 0;
  bool game_budget_exceeded = false;
  bool game_won = false;
  std::size_t extracted_states = 0;
  std::size_t search_nodes = 0;
  bool search_budget_exceeded = false;
  bool from_game = false;
};

/// Machine with at most machine_bound states whose runs in u visit at most
/// counter_bound rejecting states, or nothing.
std::optional<MooreMachine> bounded_synthesize(const Uca& u, const Alphabet& inputs, const Alphabet& outputs,
                                               std::size_t machine_bound, std::size_t counter_bound,
                                               SynthStats* stats = nullptr, const SynthOptions& opts = {});

struct Schedule {
  std::vector<std::size_t> machine_bounds{1, 2, 3, 4};
  std::vector<std::size_t> counter_bounds{1, 2, 4, 8};
};

struct BoundsTried {
  std::size_t machine_bound;
  std::size_t counter_bound;
  bool found;
};

struct SynthesisResult {
  std::optional<MooreMachine> machine;
  std::size_t machine_bound = 0;
  std::size_t counter_bound = 0;
  std::vector<BoundsTried> tried;
  std::optional<ModelCheckResult> certificate;
  DdUcaStages stages;
  std::size_t uca_states = 0;
};

/// Iterative deepening over (machine bound, counter bound) in lexicographic order.
SynthesisResult synthesize_with_schedule(const Uca& u, const Alphabet& inputs, const Alphabet& outputs,
                                         const Schedule& schedule = {}, const SynthOptions& opts = {});
SynthesisResult synthesize_dd(const Formula& phi, const Architecture& arch, const std::string& process,
                              const Schedule& schedule = {}, const SynthOptions& opts = {});

/// CNF over the counting game positions: satisfiable iff the system wins with bound k.
std::string export_dimacs(const Uca& u, const Alphabet& inputs, const Alphabet& outputs, std::size_t counter_bound,
                          const SynthOptions& opts = {});

}  // namespace ddsynth
