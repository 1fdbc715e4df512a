/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hykeep/polynomial.hpp"

namespace hykeep {

struct DivisionByZeroError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonRationalValueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree extending polynomials with exact quotients, sine/cosine of
/// a single variable and exact rational multiples of pi. Immutable.
class Expr {
 public:
  enum class Kind { Poly, Quot, Sum, Prod, Neg, Sin, Cos, Pi };

  Kind kind;
  Polynomial poly;            // Kind::Poly
  Rational pi_mult;           // Kind::Pi, value pi_mult * pi
  int trig_var = -1;          // Kind::Sin / Kind::Cos
  VarsPtr vars;               // always set
  std::vector<ExprPtr> kids;  // Quot(2), Sum(n), Prod(n), Neg(1)

  static ExprPtr make_poly(Polynomial p);
  static ExprPtr make_const(VarsPtr vars, const Rational& c);
  static ExprPtr make_var(VarsPtr vars, const std::string& name);
  static ExprPtr make_pi(VarsPtr vars, const Rational& mult);
  static ExprPtr make_sin(VarsPtr vars, int var);
  static ExprPtr make_cos(VarsPtr vars, int var);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr quot(ExprPtr num, ExprPtr den);  // den must not be the zero expr
  static ExprPtr pow(ExprPtr a, unsigned e);

  bool is_poly() const { return kind == Kind::Poly; }
  /// Polynomial view if the tree is (convertible to) a polynomial.
  std::optional<Polynomial> as_polynomial() const;
  /// N/D view with D nonzero polynomial; succeeds for any sin/cos-free tree.
  std::optional<std::pair<Polynomial, Polynomial>> as_rational_function() const;

  bool contains_trig() const;
  bool contains_pi() const;
  bool mentions(int var) const;

  /// Exact evaluation. Throws NonRationalValueError on sin/cos/pi nodes,
  /// DivisionByZeroError on a zero denominator, UnboundSymbolError as usual.
  Rational evaluate_exact(const std::map<std::string, Rational>& point) const;
  /// Double evaluation against a state vector indexed by the VarOrder.
  double evaluate(const double* state) const;

  /// Time derivative along f (sum/product/quotient/chain rules). The result
  /// is again an Expr; for rational trees it is the usual quotient-rule form.
  ExprPtr lie(const VectorField& f) const;

  std::string str() const;
  bool equals(const Expr& o) const;

 private:
  Expr() = default;
};

/// a + b*pi with polynomial part; recognized from affine trees. Used for
/// atoms whose bounds are exact rational multiples of pi.
struct PiAffine {
  Polynomial poly;     // polynomial part
  Rational pi_coeff;   // coefficient of pi
};
std::optional<PiAffine> try_pi_affine(const Expr& e);

}  // namespace hykeep
