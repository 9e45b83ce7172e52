#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ddsynth/lasso.hpp"

namespace ddsynth {

struct MooreMachine {
  Alphabet inputs;
  Alphabet outputs;
  State initial = 0;
  std::vector<Letter> label;               ///< output letter per state
  std::vector<std::vector<State>> trans;  ///< [state][input letter]

  std::size_t num_states() const { return label.size(); }
  /// Throws if the machine is malformed.
  void validate() const;
  bool operator==(const MooreMachine&) const = default;
};

MooreMachine constant_machine(const Alphabet& inputs, const Alphabet& outputs, Letter label);

/// Trace over inputs ++ outputs.
LassoWord computation(const MooreMachine& m, const LassoWord& gamma);

MooreMachine compose(const MooreMachine& a, const MooreMachine& b);
MooreMachine prune_unreachable(const MooreMachine& m);
/// Moore minimisation by partition refinement, states renumbered in BFS order.
MooreMachine minimize(const MooreMachine& m);
/// Renumbers reachable states by BFS discovery order.
MooreMachine bfs_canonical(const MooreMachine& m);

/// All machines with 1..max_states states whose states are all reachable, in BFS-canonical form.
void enumerate_machines(const Alphabet& inputs, const Alphabet& outputs, std::size_t max_states,
                        const std::function<bool(const MooreMachine&)>& visit);
std::vector<MooreMachine> enumerate_machines(const Alphabet& inputs, const Alphabet& outputs,
                                             std::size_t max_states);

std::string write_moore(const MooreMachine& m);
MooreMachine read_moore(const std::string& text);
std::string moore_to_dot(const MooreMachine& m);

struct Process {
  std::string name;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

struct Architecture {
  std::vector<std::string> env_outputs;
  std::vector<Process> processes;

  const Process& process(const std::string& name) const;
  void validate() const;
  /// All outputs of processes and environment, in declaration order.
  std::vector<std::string> variables() const;
  std::vector<std::string> system_outputs() const;
  /// Environment outputs read by some process plus those not produced by any process.
  std::vector<std::string> system_inputs() const;
};

Architecture read_architecture(const std::string& text);
std::string write_architecture(const Architecture& a);

}  // namespace ddsynth
