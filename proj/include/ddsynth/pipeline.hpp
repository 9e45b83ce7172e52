#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddsynth/synthesis.hpp"

namespace ddsynth {

struct ProcessReport {
  std::string name;
  DdUcaStages stages;
  std::size_t dd_states = 0;
  std::optional<MooreMachine> machine;
  std::size_t machine_bound = 0;
  std::size_t counter_bound = 0;
  std::vector<BoundsTried> tried;
  bool dd_verified = false;
  double seconds = 0;
  std::string error;
};

struct PipelineReport {
  std::string formula;
  std::size_t phi_states = 0;
  std::vector<ProcessReport> processes;
  std::optional<MooreMachine> composed;
  std::optional<bool> composed_dd;
  std::optional<bool> composed_winning;
  std::optional<LassoWord> dd_counterexample;
  std::optional<LassoWord> winning_counterexample;
  std::size_t system_dd_states = 0;
  double seconds = 0;

  /// JSON text; timing fields are omitted when `with_timing` is false.
  std::string to_json(bool with_timing = true) const;
};

struct PipelineResult {
  std::optional<MooreMachine> composed;
  PipelineReport report;
};

PipelineResult compositional_synth(const Formula& phi, const Architecture& arch, const Schedule& schedule = {},
                                   const SynthOptions& opts = {});

}  // namespace ddsynth
