#include <cctype>
#include <functional>

#include "ddsynth/ltl.hpp"

namespace ddsynth {

namespace {

Formula node(Op op, Formula l = nullptr, Formula r = nullptr, std::string atom = {}) {
  return std::make_shared<const LtlNode>(LtlNode{op, std::move(atom), std::move(l), std::move(r)});
}

enum class Tok { End, LParen, RParen, Not, And, Or, Next, Until, Release, Eventually, Globally, True, False, Ident };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", i++}); continue;
      case ')': out.push_back({Tok::RParen, ")", i++}); continue;
      case '!': out.push_back({Tok::Not, "!", i++}); continue;
      case '&': out.push_back({Tok::And, "&", i++}); continue;
      case '|': out.push_back({Tok::Or, "|", i++}); continue;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\''))
        ++i;
      std::string w = s.substr(start, i - start);
      Tok k = Tok::Ident;
      if (w == "X") k = Tok::Next;
      else if (w == "U") k = Tok::Until;
      else if (w == "R") k = Tok::Release;
      else if (w == "F") k = Tok::Eventually;
      else if (w == "G") k = Tok::Globally;
      else if (w == "true") k = Tok::True;
      else if (w == "false") k = Tok::False;
      out.push_back({k, w, start});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const std::set<std::string>& props) : toks_(std::move(toks)), props_(props) {}

  Formula parse() {
    Formula f = parse_or();
    if (peek().kind != Tok::End) fail("expected operator or end of input");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
    throw ParseError("syntax error: " + expected + ", got " + got, peek().pos);
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = ltl_or(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_binary_temporal();
    while (peek().kind == Tok::And) {
      take();
      f = ltl_and(f, parse_binary_temporal());
    }
    return f;
  }

  Formula parse_binary_temporal() {
    Formula f = parse_unary();
    if (peek().kind == Tok::Until) {
      take();
      return ltl_until(f, parse_binary_temporal());
    }
    if (peek().kind == Tok::Release) {
      take();
      return ltl_release(f, parse_binary_temporal());
    }
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return ltl_not(parse_unary());
      case Tok::Next: take(); return ltl_next(parse_unary());
      case Tok::Eventually: take(); return ltl_eventually(parse_unary());
      case Tok::Globally: take(); return ltl_globally(parse_unary());
      case Tok::True: take(); return ltl_true();
      case Tok::False: take(); return ltl_false();
      case Tok::Ident: {
        Token t = take();
        if (!props_.count(t.text)) throw ParseError("unknown atom '" + t.text + "'", t.pos);
        return ltl_atom(t.text);
      }
      case Tok::LParen: {
        take();
        Formula f = parse_or();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return f;
      }
      default: fail("expected one of true, false, atom, '!', 'X', 'F', 'G', '('");
    }
  }

  std::vector<Token> toks_;
  const std::set<std::string>& props_;
  std::size_t pos_ = 0;
};

int prec(Op op) {
  switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Until:
    case Op::Release: return 3;
    default: return 4;
  }
}

std::string print(const Formula& f) {
  auto wrap = [](const Formula& g, bool paren) { return paren ? "(" + print(g) + ")" : print(g); };
  switch (f->op) {
    case Op::True: return "true";
    case Op::False: return "false";
    case Op::Atom: return f->atom;
    case Op::Not: return "!" + wrap(f->lhs, prec(f->lhs->op) < 4);
    case Op::Next: return "X " + wrap(f->lhs, prec(f->lhs->op) < 4);
    case Op::Eventually: return "F " + wrap(f->lhs, prec(f->lhs->op) < 4);
    case Op::Globally: return "G " + wrap(f->lhs, prec(f->lhs->op) < 4);
    case Op::And:
      return wrap(f->lhs, prec(f->lhs->op) < 2) + " & " + wrap(f->rhs, prec(f->rhs->op) <= 2);
    case Op::Or:
      return wrap(f->lhs, prec(f->lhs->op) < 1) + " | " + wrap(f->rhs, prec(f->rhs->op) <= 1);
    case Op::Until:
    case Op::Release:
      return wrap(f->lhs, prec(f->lhs->op) <= 3) + (f->op == Op::Until ? " U " : " R ") +
             wrap(f->rhs, prec(f->rhs->op) < 3);
  }
  return {};
}

}  // namespace

Formula ltl_true() { return node(Op::True); }
Formula ltl_false() { return node(Op::False); }
Formula ltl_atom(std::string name) { return node(Op::Atom, nullptr, nullptr, std::move(name)); }
Formula ltl_not(Formula f) { return node(Op::Not, std::move(f)); }
Formula ltl_and(Formula a, Formula b) { return node(Op::And, std::move(a), std::move(b)); }
Formula ltl_or(Formula a, Formula b) { return node(Op::Or, std::move(a), std::move(b)); }
Formula ltl_next(Formula f) { return node(Op::Next, std::move(f)); }
Formula ltl_until(Formula a, Formula b) { return node(Op::Until, std::move(a), std::move(b)); }
Formula ltl_release(Formula a, Formula b) { return node(Op::Release, std::move(a), std::move(b)); }
Formula ltl_eventually(Formula f) { return node(Op::Eventually, std::move(f)); }
Formula ltl_globally(Formula f) { return node(Op::Globally, std::move(f)); }

Formula parse_ltl(const std::string& text, const std::set<std::string>& props) {
  return Parser(lex(text), props).parse();
}

std::string to_string(const Formula& f) { return print(f); }

bool equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->atom != b->atom) return false;
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

std::size_t formula_size(const Formula& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> go = [&](const Formula& g) {
    if (!g) return;
    if (g->op == Op::Atom) out.insert(g->atom);
    go(g->lhs);
    go(g->rhs);
  };
  go(f);
  return out;
}

Formula normalize(const Formula& f) {
  switch (f->op) {
    case Op::True:
    case Op::False:
    case Op::Atom: return f;
    case Op::Eventually: return ltl_until(ltl_true(), normalize(f->lhs));
    case Op::Globally: return ltl_not(ltl_until(ltl_true(), ltl_not(normalize(f->lhs))));
    case Op::Not:
    case Op::Next: return node(f->op, normalize(f->lhs));
    default: return node(f->op, normalize(f->lhs), normalize(f->rhs));
  }
}

namespace {

Formula to_nnf(const Formula& f, bool neg) {
  switch (f->op) {
    case Op::True: return neg ? ltl_false() : f;
    case Op::False: return neg ? ltl_true() : f;
    case Op::Atom: return neg ? ltl_not(f) : f;
    case Op::Not: return to_nnf(f->lhs, !neg);
    case Op::And:
      return neg ? ltl_or(to_nnf(f->lhs, true), to_nnf(f->rhs, true))
                 : ltl_and(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
    case Op::Or:
      return neg ? ltl_and(to_nnf(f->lhs, true), to_nnf(f->rhs, true))
                 : ltl_or(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
    case Op::Next: return ltl_next(to_nnf(f->lhs, neg));
    case Op::Until:
      return neg ? ltl_release(to_nnf(f->lhs, true), to_nnf(f->rhs, true))
                 : ltl_until(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
    case Op::Release:
      return neg ? ltl_until(to_nnf(f->lhs, true), to_nnf(f->rhs, true))
                 : ltl_release(to_nnf(f->lhs, false), to_nnf(f->rhs, false));
    case Op::Eventually:
      return neg ? ltl_globally(to_nnf(f->lhs, true)) : ltl_eventually(to_nnf(f->lhs, false));
    case Op::Globally:
      return neg ? ltl_eventually(to_nnf(f->lhs, true)) : ltl_globally(to_nnf(f->lhs, false));
  }
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return to_nnf(f, false); }
Formula negate_nnf(const Formula& f) { return to_nnf(f, true); }

bool is_nnf(const Formula& f) {
  if (!f) return true;
  if (f->op == Op::Not) return f->lhs->op == Op::Atom;
  return is_nnf(f->lhs) && is_nnf(f->rhs);
}

bool eval_ltl_lasso(const Formula& f, const LassoWord& w) {
  const std::size_t n = w.period();
  std::function<std::vector<char>(const Formula&)> ev = [&](const Formula& g) -> std::vector<char> {
    std::vector<char> v(n, 0);
    switch (g->op) {
      case Op::True: std::fill(v.begin(), v.end(), 1); break;
      case Op::False: break;
      case Op::Atom: {
        auto i = w.props.index_of(g->atom);
        if (!i) throw AlphabetMismatch("atom '" + g->atom + "' not in word alphabet");
        for (std::size_t k = 0; k < n; ++k) v[k] = (w.at(k) >> *i) & 1;
        break;
      }
      case Op::Not: {
        auto a = ev(g->lhs);
        for (std::size_t k = 0; k < n; ++k) v[k] = !a[k];
        break;
      }
      case Op::And:
      case Op::Or: {
        auto a = ev(g->lhs), b = ev(g->rhs);
        for (std::size_t k = 0; k < n; ++k) v[k] = g->op == Op::And ? (a[k] && b[k]) : (a[k] || b[k]);
        break;
      }
      case Op::Next: {
        auto a = ev(g->lhs);
        for (std::size_t k = 0; k < n; ++k) v[k] = a[w.next(k)];
        break;
      }
      case Op::Until:
      case Op::Release:
      case Op::Eventually:
      case Op::Globally: {
        std::vector<char> a(n, 1), b;
        bool least = g->op == Op::Until || g->op == Op::Eventually;
        if (g->op == Op::Until || g->op == Op::Release) {
          a = ev(g->lhs);
          b = ev(g->rhs);
        } else {
          b = ev(g->lhs);
          if (g->op == Op::Globally) std::fill(a.begin(), a.end(), 0);
        }
        std::fill(v.begin(), v.end(), least ? 0 : 1);
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t k = n; k-- > 0;) {
            char nv = least ? (b[k] || (a[k] && v[w.next(k)])) : (b[k] && (a[k] || v[w.next(k)]));
            if (nv != v[k]) {
              v[k] = nv;
              changed = true;
            }
          }
        }
        break;
      }
    }
    return v;
  };
  return ev(f)[0];
}

}  // namespace ddsynth
