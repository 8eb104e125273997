#pragma once

#include <memory>
#include <string>
#include <vector>

#include "carext/completion.hpp"

namespace carext {

/// Expression language for elements, builtin families and set operators.
/// Grammar (ASCII, whitespace insignificant):
///   expr    := prod (('|' | '\') prod)*        left-assoc
///   prod    := unary ('&' unary)*              left-assoc, binds tighter
///   unary   := '!' unary | primary             '!' binds tightest
///   primary := '(' expr ')' | '[' rat ',' rat ')' | '{' atoms '}'
///            | ident | ident '(' rat (',' rat)* ')'
///   rat     := int | int '/' int
///   atoms   := (empty) | aN (',' aN)*
struct Expr {
  enum class Kind { Interval, AtomSet, Name, Family, Union, Intersect, Diff, Complement };

  Kind kind;
  Rational lo, hi;              // Interval
  std::vector<int> atoms;       // AtomSet
  std::string name;             // Name / Family
  std::vector<Rational> params; // Family arguments
  std::shared_ptr<const Expr> a, b;

  bool identical(const Expr& other) const;
};

using ExprPtr = std::shared_ptr<const Expr>;

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line), column(column) {}
};

ExprPtr parse(const std::string& text);

/// Canonical text form; print(parse(t)) reparses to an identical tree.
std::string print(const Expr& e);

/// Evaluates an operator tree of interval/atom literals to a canonical
/// Element. Family or bare-name leaves are a usage error here.
Element eval_element(const Expr& e, const AlgebraConfig& cfg);

/// Builtin families with proven moduli: fatcantor, increasing,
/// dyadicblocks(i), perturb(seed).
CauchyPoint eval_family(const std::string& name, const std::vector<Rational>& params);

/// Evaluates a full expression to a completion point: literal leaves become
/// constant points, family leaves their builtin points, operators the
/// pointwise completion operations.
CauchyPoint eval_point(const Expr& e, const AlgebraConfig& cfg);

}  // namespace carext
