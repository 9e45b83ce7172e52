#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ddsynth/automata.hpp"
#include "ddsynth/ltl.hpp"
#include "ddsynth/moore.hpp"

namespace testing {

using Rng = std::mt19937_64;
using namespace ddsynth;

std::string fixture(const std::string& name);

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi);
bool coin(Rng& rng, double p = 0.5);

Formula random_formula(Rng& rng, const std::vector<std::string>& props, std::size_t size);
LassoWord random_lasso(Rng& rng, const Alphabet& props, std::size_t max_prefix, std::size_t max_loop);

/// Arbitrary ACA: transitions are random DNFs, occasionally true or false.
Aca random_aca(Rng& rng, const Alphabet& props, std::size_t states, std::size_t max_disjuncts = 2,
               std::size_t max_clause = 2);
/// Weak ACA: states are grouped into blocks visited in order, marking is uniform per block.
Aca random_weak_aca(Rng& rng, const Alphabet& props, std::size_t states);
Uca random_uca(Rng& rng, const Alphabet& props, std::size_t states);
MooreMachine random_machine(Rng& rng, const Alphabet& inputs, const Alphabet& outputs, std::size_t max_states);

/// LTL semantics straight from the definition, looking at most one period ahead.
bool ltl_oracle(const Formula& f, const LassoWord& w);

/// Tries every positional run on w; exponential, meant for tiny instances.
bool aca_bruteforce(const Aca& a, const LassoWord& w);

/// All words over `full` agreeing with w on w's propositions, with w's shape.
std::vector<LassoWord> same_shape_extensions(const LassoWord& w, const Alphabet& full);
/// Extension of w along which u has a run through a rejecting state infinitely often, if any.
std::optional<LassoWord> rejected_extension(const Uca& u, const LassoWord& w);

}  // namespace testing
