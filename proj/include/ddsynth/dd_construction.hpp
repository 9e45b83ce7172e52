#pragma once

#include <string>
#include <vector>

#include "ddsynth/automata.hpp"

namespace ddsynth {

std::string primed(const std::string& name);
std::string unprimed(const std::string& name);

/// Replaces every output proposition by its primed copy.
LassoWord prime_trace(const LassoWord& w, const std::vector<std::string>& outputs);

struct Marked {
  State p;
  State q;
  bool bottom;
  bool operator==(const Marked&) const = default;
};
Marked theta(State p, State q, bool bottom, const std::vector<char>& rejecting);

/// Where a state of the product automaton comes from.
struct DdOrigin {
  bool complement = false;
  State p = 0;  ///< alternative state, or the complement state
  State q = 0;
  bool bottom = false;
};

struct DdProductAca {
  Aca aca;
  /// 2|Q|^2 + |Q^c| where Q is the completed automaton for phi.
  std::size_t states_before_pruning = 0;
  std::size_t phi_states = 0;
  std::size_t negphi_states = 0;
  std::vector<DdOrigin> origin;
};

/// Word read by the product: dominant trace with the alternative's outputs primed.
LassoWord dd_word(const LassoWord& dominant, const LassoWord& alternative, const std::vector<std::string>& outputs);

DdProductAca build_dd_aca(const Aca& a_phi, const Aca& a_negphi, const std::vector<std::string>& outputs);

}  // namespace ddsynth
