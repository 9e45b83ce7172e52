#include <algorithm>

#include "ddsynth/dnf.hpp"

namespace ddsynth {

Dnf canonicalize(Dnf d) {
  for (auto& c : d) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(d.begin(), d.end(), [](const Clause& a, const Clause& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  d.erase(std::unique(d.begin(), d.end()), d.end());
  Dnf out;
  for (auto& c : d) {
    bool subsumed = false;
    for (const auto& k : out)
      if (is_subset(k, c)) {
        subsumed = true;
        break;
      }
    if (!subsumed) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Dnf dnf_or(const Dnf& a, const Dnf& b) {
  Dnf out = a;
  out.insert(out.end(), b.begin(), b.end());
  return canonicalize(std::move(out));
}

Dnf dnf_and(const Dnf& a, const Dnf& b) {
  Dnf out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(set_union(x, y));
  return canonicalize(std::move(out));
}

Dnf dnf_dual(const Dnf& d) {
  Dnf out = dnf_true();
  for (const auto& c : d) {
    Dnf alt;
    for (State q : c) alt.push_back({q});
    out = dnf_and(out, alt);
    if (is_false(out)) break;
  }
  return out;
}

Dnf dnf_map(const Dnf& d, const std::vector<State>& rename) {
  Dnf out = d;
  for (auto& c : out)
    for (auto& q : c) q = rename[q];
  return canonicalize(std::move(out));
}

Dnf dnf_shift(const Dnf& d, State offset) {
  Dnf out = d;
  for (auto& c : out)
    for (auto& q : c) q += offset;
  return out;
}

bool dnf_eval(const Dnf& d, const std::vector<char>& value) {
  for (const auto& c : d)
    if (std::all_of(c.begin(), c.end(), [&](State q) { return value[q]; })) return true;
  return false;
}

}  // namespace ddsynth
