#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "ddsynth/automata.hpp"
#include "ddsynth/dd_construction.hpp"
#include "ddsynth/moore.hpp"

namespace ddsynth {

/// Breakpoint state: tracked set S and the owing subset R.
struct MhState {
  StateSet s;
  StateSet r;
  bool operator<(const MhState& o) const { return std::tie(s, r) < std::tie(o.s, o.r); }
  bool operator==(const MhState&) const = default;
};

struct MhOptions {
  std::size_t max_states = 2'000'000;
};

/// Language-equivalent UCA through the breakpoint construction on the dual automaton.
Uca aca_to_uca(const Aca& a, const MhOptions& opts = {});
/// Universal automaton for f.
Uca ltl_to_uca(const Formula& f, const Alphabet& props, const MhOptions& opts = {});
/// Existential completion of the propositions outside `keep`, which must be a strict subset.
Uca universal_project(const Uca& u, const std::vector<std::string>& keep);

struct DdUcaStages {
  std::size_t phi_states = 0;
  std::size_t negphi_states = 0;
  std::size_t product_states_before_pruning = 0;
  std::size_t product_states = 0;
  std::size_t nonprojected_states = 0;
  std::size_t dd_states = 0;
};

/// A^dd from explicit automata for phi and its negation.
Uca build_dd_uca(const Aca& a_phi, const Aca& a_negphi, const std::vector<std::string>& inputs,
                 const std::vector<std::string>& outputs, DdUcaStages* stages = nullptr, const MhOptions& opts = {});
/// A^dd for a process of an architecture.
Uca build_dd_uca(const Formula& phi, const Architecture& arch, const std::string& process,
                 DdUcaStages* stages = nullptr, const MhOptions& opts = {});
/// A^dd for the whole system seen as one process.
Uca build_system_dd_uca(const Formula& phi, const Architecture& arch, DdUcaStages* stages = nullptr,
                        const MhOptions& opts = {});

}  // namespace ddsynth
