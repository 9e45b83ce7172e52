#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ddsynth/dnf.hpp"
#include "ddsynth/lasso.hpp"
#include "ddsynth/ltl.hpp"

namespace ddsynth {

/// Alternating automaton with letter-indexed DNF transitions.
/// `marked` holds the accepting states (Buchi) or rejecting states (co-Buchi).
struct Alternating {
  Alphabet props;
  std::vector<std::string> names;
  State initial = 0;
  std::vector<char> marked;
  std::vector<std::vector<Dnf>> delta;  ///< [state][letter]

  std::size_t num_states() const { return names.size(); }
  State add_state(std::string name, bool mark);
  bool operator==(const Alternating&) const = default;
};

struct Aba : Alternating {};
struct Aca : Alternating {};

/// Universal co-Buchi automaton with successor sets per letter.
struct Uca {
  Alphabet props;
  std::vector<std::string> names;
  State initial = 0;
  std::vector<char> rejecting;
  std::vector<std::vector<StateSet>> succ;  ///< [state][letter]

  std::size_t num_states() const { return names.size(); }
  State add_state(std::string name, bool rejecting);
};

Aba ltl_to_aba(const Formula& f, const Alphabet& props);
Aca dualize(const Aba& b);
Aba dualize(const Aca& a);
/// ACA for f built from the ABA of its negation.
Aca ltl_to_aca(const Formula& f, const Alphabet& props);

struct RunTreeCertificate {
  std::size_t period = 0;
  std::size_t loop_start = 0;
  /// Chosen disjunct per (state, folded position) node of the run.
  std::map<std::pair<State, std::size_t>, std::size_t> choice;
  /// Induced graph over those nodes.
  std::map<std::pair<State, std::size_t>, std::vector<std::pair<State, std::size_t>>> edges;
};

struct Membership {
  bool accepted = false;
  std::optional<RunTreeCertificate> certificate;
};

Membership aca_accepts_lasso(const Aca& a, const LassoWord& w);
bool uca_accepts_lasso(const Uca& u, const LassoWord& w);
/// Certificate is a valid accepting run tree of a on w.
bool check_certificate(const Aca& a, const LassoWord& w, const RunTreeCertificate& c);

/// Drops rejecting states that lie on no cycle of the state graph.
Aca prune_noncycle_rejecting(const Aca& a);
/// Keeps only states reachable from the initial state.
Aca prune_unreachable(const Aca& a, std::vector<State>* kept = nullptr);
/// Replaces true by a non-rejecting sink and false by a rejecting sink.
Aca complete_aca(const Aca& a);
/// Complement of a weak ACA; throws if some state graph SCC mixes rejecting and non-rejecting states.
Aca complement_weak(const Aca& a);
bool is_weak(const Aca& a);

/// Reinterprets the automaton over another ordering of the same propositions.
Aca reindex(const Aca& a, const Alphabet& props);
Uca reindex(const Uca& u, const Alphabet& props);

std::string write_aca(const Aca& a);
Aca read_aca(const std::string& text);
std::string write_uca(const Uca& u);
/// Unlisted transitions lead to an added non-rejecting sink.
Uca read_uca(const std::string& text);
std::string aca_to_dot(const Aca& a);
std::string uca_to_dot(const Uca& u);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace ddsynth
