#include <algorithm>
#include <set>

#include "ddsynth/common.hpp"

namespace ddsynth {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty proposition name");
    if (!seen.insert(n).second) throw Error("duplicate proposition '" + n + "'");
  }
  if (names_.size() > 20) throw Error("too many propositions");
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Letter Alphabet::parse_letter(std::string_view text) const {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw ParseError("letter must look like {a,b}: '" + t + "'", 0);
  Letter l = 0;
  for (const auto& n : split_list(std::string_view(t).substr(1, t.size() - 2))) {
    auto i = index_of(n);
    if (!i) throw Error("unknown proposition '" + n + "'");
    l |= Letter{1} << *i;
  }
  return l;
}

std::string Alphabet::format_letter(Letter l) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!(l >> i & 1)) continue;
    if (!first) out += ',';
    out += names_[i];
    first = false;
  }
  return out + "}";
}

Letter Alphabet::mask_of(const std::vector<std::string>& names) const {
  Letter l = 0;
  for (const auto& n : names) {
    auto i = index_of(n);
    if (!i) throw AlphabetMismatch("unknown proposition '" + n + "'");
    l |= Letter{1} << *i;
  }
  return l;
}

bool Alphabet::same_set(const Alphabet& other) const {
  auto a = names_, b = other.names_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

LetterMap::LetterMap(const Alphabet& from, const Alphabet& to) {
  for (const auto& n : from.names()) {
    auto i = to.index_of(n);
    target_.push_back(i ? static_cast<int>(*i) : -1);
  }
}

Letter LetterMap::operator()(Letter l) const {
  Letter out = 0;
  for (std::size_t i = 0; i < target_.size(); ++i)
    if ((l >> i & 1) && target_[i] >= 0) out |= Letter{1} << target_[i];
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    auto t = trim(cur);
    if (!t.empty()) out.push_back(t);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t') flush();
    else cur += c;
  }
  flush();
  return out;
}

void set_insert(StateSet& s, State q) {
  auto it = std::lower_bound(s.begin(), s.end(), q);
  if (it == s.end() || *it != q) s.insert(it, q);
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const StateSet& s, State q) { return std::binary_search(s.begin(), s.end(), q); }

bool is_subset(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace ddsynth
