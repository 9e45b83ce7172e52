#include <numeric>
#include <sstream>

#include "ddsynth/lasso.hpp"

namespace ddsynth {

Letter LassoWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return loop[(i - prefix.size()) % loop.size()];
}

LassoWord make_lasso(Alphabet props, std::vector<Letter> prefix, std::vector<Letter> loop) {
  if (loop.empty()) throw Error("lasso loop must be nonempty");
  Letter limit = props.num_letters();
  for (Letter l : prefix)
    if (l >= limit) throw Error("letter outside alphabet");
  for (Letter l : loop)
    if (l >= limit) throw Error("letter outside alphabet");
  return LassoWord{std::move(props), std::move(prefix), std::move(loop)};
}

LassoWord parse_lasso(const std::string& text, const Alphabet& props) {
  std::vector<Letter> prefix, loop;
  bool in_loop = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
    } else if (c == '$') {
      if (in_loop) throw ParseError("second '$' in lasso", i);
      in_loop = true;
      ++i;
    } else if (c == '{') {
      auto close = text.find('}', i);
      if (close == std::string::npos) throw ParseError("unterminated letter", i);
      Letter l;
      try {
        l = props.parse_letter(std::string_view(text).substr(i, close - i + 1));
      } catch (const ParseError&) {
        throw ParseError("malformed letter", i);
      }
      (in_loop ? loop : prefix).push_back(l);
      i = close + 1;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in lasso", i);
    }
  }
  if (!in_loop) throw ParseError("lasso needs '$' before its loop", text.size());
  if (loop.empty()) throw ParseError("lasso loop is empty", text.size());
  return make_lasso(props, std::move(prefix), std::move(loop));
}

std::string format_lasso(const LassoWord& w) {
  std::ostringstream out;
  for (Letter l : w.prefix) out << w.props.format_letter(l) << ' ';
  out << '$';
  for (Letter l : w.loop) out << ' ' << w.props.format_letter(l);
  return out.str();
}

LassoWord unroll(const LassoWord& w, std::size_t prefix_len, std::size_t loop_len) {
  if (prefix_len < w.prefix.size() || loop_len % w.loop.size() != 0)
    throw Error("unroll shape does not cover the word");
  LassoWord out{w.props, {}, {}};
  for (std::size_t i = 0; i < prefix_len; ++i) out.prefix.push_back(w.at(i));
  for (std::size_t i = 0; i < loop_len; ++i) out.loop.push_back(w.at(prefix_len + i));
  return out;
}

std::pair<LassoWord, LassoWord> align(const LassoWord& a, const LassoWord& b) {
  std::size_t p = std::max(a.prefix.size(), b.prefix.size());
  std::size_t l = std::lcm(a.loop.size(), b.loop.size());
  return {unroll(a, p, l), unroll(b, p, l)};
}

LassoWord reindex(const LassoWord& w, const Alphabet& target) {
  LetterMap map(w.props, target);
  LassoWord out{target, {}, {}};
  for (Letter l : w.prefix) out.prefix.push_back(map(l));
  for (Letter l : w.loop) out.loop.push_back(map(l));
  return out;
}

LassoWord lasso_union(const LassoWord& a, const LassoWord& b) {
  auto names = a.props.names();
  for (const auto& n : b.props.names())
    if (!a.props.contains(n)) names.push_back(n);
  Alphabet props(names);
  auto [x, y] = align(a, b);
  LetterMap ma(a.props, props), mb(b.props, props);
  LassoWord out{props, {}, {}};
  for (std::size_t i = 0; i < x.prefix.size(); ++i)
    out.prefix.push_back(ma(x.prefix[i]) | mb(y.prefix[i]));
  for (std::size_t i = 0; i < x.loop.size(); ++i)
    out.loop.push_back(ma(x.loop[i]) | mb(y.loop[i]));
  return out;
}

LassoWord canonical(const LassoWord& w) {
  LassoWord out = w;
  // smallest loop period
  std::size_t n = out.loop.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = out.loop[i] == out.loop[i - d];
    if (ok) {
      out.loop.resize(d);
      break;
    }
  }
  // roll the loop back into the prefix
  while (!out.prefix.empty() && out.prefix.back() == out.loop.back()) {
    out.prefix.pop_back();
    std::rotate(out.loop.rbegin(), out.loop.rbegin() + 1, out.loop.rend());
  }
  return out;
}

bool same_word(const LassoWord& a, const LassoWord& b) {
  if (!a.props.same_set(b.props)) return false;
  auto bb = reindex(b, a.props);
  auto [x, y] = align(a, bb);
  return x.prefix == y.prefix && x.loop == y.loop;
}

}  // namespace ddsynth
