#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ddsynth {

using State = std::uint32_t;
using Letter = std::uint32_t;
using StateSet = std::vector<State>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position_(pos) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Ordered list of proposition names; letters are bitmasks over it.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  Letter num_letters() const { return Letter{1} << names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  Letter parse_letter(std::string_view text) const;
  std::string format_letter(Letter l) const;
  Letter mask_of(const std::vector<std::string>& names) const;

  /// Same names regardless of order.
  bool same_set(const Alphabet& other) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Maps letters of `from` to letters of `to` by proposition name.
/// Names of `from` missing in `to` are dropped.
class LetterMap {
 public:
  LetterMap(const Alphabet& from, const Alphabet& to);
  Letter operator()(Letter l) const;

 private:
  std::vector<int> target_;
};

std::vector<std::string> split_list(std::string_view text);
std::string trim(std::string_view s);

void set_insert(StateSet& s, State q);
StateSet set_union(const StateSet& a, const StateSet& b);
bool set_contains(const StateSet& s, State q);
bool is_subset(const StateSet& a, const StateSet& b);

}  // namespace ddsynth
