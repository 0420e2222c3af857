#pragma once

// Expression language over fusion-ring objects:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | atom | '(' expr ')'
//   atom   := V[i] | chi*V[i] | chi | X[i,+] | X[i,-] | L[i,i] | M[i,i]
//   i      := INT | -INT | p | p+INT | p-INT

#include <memory>
#include <string>

#include "ribbonkit/fusion.hpp"

namespace ribbonkit::dsl {

struct Index {
  bool uses_p = false;
  long offset = 0;

  int resolve(int p) const;
  bool operator==(const Index&) const = default;
};

struct Atom {
  Family family = Family::V;
  Index first;   // s for V and X, r for L and M
  Index second;  // s for L and M
  int sign = 0;  // chi flag for V, +1/-1 for X

  bool operator==(const Atom&) const = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Integer, Atom, Sum, Difference, Product };

  Kind kind = Kind::Integer;
  long value = 0;
  dsl::Atom atom;
  ExprPtr lhs;
  ExprPtr rhs;

  static ExprPtr integer(long v);
  static ExprPtr make_atom(dsl::Atom a);
  static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
};

bool equal(const Expr& a, const Expr& b);

/// Throws ParseError with the byte offset of the offending input.
ExprPtr parse(const std::string& input);
/// Canonical text with the fewest parentheses that parse back to the same tree.
std::string print(const Expr& e);

/// Atom family shared by every atom, or nullopt for a purely integral expression.
/// Throws UnknownLabelError when families are mixed.
std::optional<Family> family_of(const Expr& e);

/// Throws UnknownLabelError or TruncationOverflowError.
Combination evaluate(const Expr& e, const FusionRing& ring);

struct Evaluation {
  std::shared_ptr<const FusionRing> ring;
  Combination value;
  std::string text() const { return ring->format(value); }
};

/// Picks the ring from the atom family (wp for integers only) and evaluates.
Evaluation evaluate(const Expr& e, int p, int r_max);

}  // namespace ribbonkit::dsl
