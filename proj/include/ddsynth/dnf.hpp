#pragma once

#include <vector>

#include "ddsynth/common.hpp"

namespace ddsynth {

/// Positive Boolean formula over states in set notation.
/// No disjuncts is false, an empty disjunct is true.
using Clause = StateSet;
using Dnf = std::vector<Clause>;

inline Dnf dnf_true() { return Dnf{Clause{}}; }
inline Dnf dnf_false() { return Dnf{}; }
inline Dnf dnf_atom(State q) { return Dnf{Clause{q}}; }
inline bool is_true(const Dnf& d) { return d.size() == 1 && d[0].empty(); }
inline bool is_false(const Dnf& d) { return d.empty(); }

/// Sorts, deduplicates and drops subsumed disjuncts.
Dnf canonicalize(Dnf d);
Dnf dnf_or(const Dnf& a, const Dnf& b);
Dnf dnf_and(const Dnf& a, const Dnf& b);
/// Swaps conjunction and disjunction, result in canonical DNF.
Dnf dnf_dual(const Dnf& d);
Dnf dnf_map(const Dnf& d, const std::vector<State>& rename);
Dnf dnf_shift(const Dnf& d, State offset);
bool dnf_eval(const Dnf& d, const std::vector<char>& value);

}  // namespace ddsynth
