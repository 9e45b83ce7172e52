#pragma once

#include <memory>
#include <set>
#include <string>

#include "ddsynth/lasso.hpp"

namespace ddsynth {

enum class Op { True, False, Atom, Not, And, Or, Next, Until, Release, Eventually, Globally };

struct LtlNode;
using Formula = std::shared_ptr<const LtlNode>;

struct LtlNode {
  Op op;
  std::string atom;
  Formula lhs;
  Formula rhs;
};

Formula ltl_true();
Formula ltl_false();
Formula ltl_atom(std::string name);
Formula ltl_not(Formula f);
Formula ltl_and(Formula a, Formula b);
Formula ltl_or(Formula a, Formula b);
Formula ltl_next(Formula f);
Formula ltl_until(Formula a, Formula b);
Formula ltl_release(Formula a, Formula b);
Formula ltl_eventually(Formula f);
Formula ltl_globally(Formula f);

/// Grammar: true | false | atom | ! f | f & g | f | g | X f | f U g | f R g | F f | G f | ( f ).
/// Unary binds tightest, then U and R (right associative), then &, then |.
Formula parse_ltl(const std::string& text, const std::set<std::string>& props);

std::string to_string(const Formula& f);
bool equal(const Formula& a, const Formula& b);
std::size_t formula_size(const Formula& f);
std::set<std::string> atoms(const Formula& f);

/// Rewrites F and G through U and negation.
Formula normalize(const Formula& f);
/// Negation normal form of f, keeping F and G.
Formula nnf(const Formula& f);
/// Negation normal form of !f.
Formula negate_nnf(const Formula& f);
bool is_nnf(const Formula& f);

bool eval_ltl_lasso(const Formula& f, const LassoWord& w);

}  // namespace ddsynth
