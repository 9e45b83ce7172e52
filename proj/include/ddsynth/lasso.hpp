#pragma once

#include <string>
#include <vector>

#include "ddsynth/common.hpp"

namespace ddsynth {

/// Ultimately periodic word prefix . loop^omega.
struct LassoWord {
  Alphabet props;
  std::vector<Letter> prefix;
  std::vector<Letter> loop;

  std::size_t period() const { return prefix.size() + loop.size(); }
  Letter at(std::size_t i) const;
  /// Successor of a folded position in [0, period).
  std::size_t next(std::size_t i) const { return i + 1 < period() ? i + 1 : prefix.size(); }
  bool operator==(const LassoWord&) const = default;
};

LassoWord make_lasso(Alphabet props, std::vector<Letter> prefix, std::vector<Letter> loop);
LassoWord parse_lasso(const std::string& text, const Alphabet& props);
std::string format_lasso(const LassoWord& w);

/// Re-expresses both words over a shared shape (longest prefix, lcm of loops).
std::pair<LassoWord, LassoWord> align(const LassoWord& a, const LassoWord& b);
LassoWord unroll(const LassoWord& w, std::size_t prefix_len, std::size_t loop_len);

/// Reinterprets letters over another alphabet by name; missing names are dropped.
LassoWord reindex(const LassoWord& w, const Alphabet& target);
/// Letter-wise union over the concatenated alphabet a.props ++ (b.props \ a.props).
LassoWord lasso_union(const LassoWord& a, const LassoWord& b);

/// Same word with a shortest equivalent prefix and loop.
LassoWord canonical(const LassoWord& w);
bool same_word(const LassoWord& a, const LassoWord& b);

}  // namespace ddsynth
