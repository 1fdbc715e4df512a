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

#include "hykeep/rational.hpp"

namespace hykeep {

struct UnknownVariableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnboundSymbolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroDivisorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered list of symbols. The position in the list is the variable index
/// everywhere else (exponent vectors, boxes, state vectors) and fixes the
/// monomial order.
class VarOrder {
 public:
  explicit VarOrder(std::vector<std::string> names);

  static std::shared_ptr<const VarOrder> station_keeping(bool with_alpha = false);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index(const std::string& name) const;        // -1 if absent
  int require(const std::string& name) const;      // throws UnknownVariableError

  bool operator==(const VarOrder& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using VarsPtr = std::shared_ptr<const VarOrder>;

/// Exponent vector, one entry per variable of the VarOrder.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded lexicographic order, higher-first so map iteration starts at the
/// leading term.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational with a shared variable order.
/// Canonical by construction: no zero coefficients stored, unique keys.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}
  Polynomial(VarsPtr vars, const Rational& c);

  static Polynomial variable(VarsPtr vars, int index);
  static Polynomial variable(VarsPtr vars, const std::string& name);
  static Polynomial constant(VarsPtr vars, const Rational& c);
  static Polynomial monomial(VarsPtr vars, Monomial m, const Rational& c);

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  int degree() const;               // total degree, -1 for the zero polynomial
  int degree_in(int var) const;
  size_t term_count() const { return terms_.size(); }
  bool mentions(int var) const;

  /// Leading term under grlex.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Strict total order for deterministic output listings:
  /// (total degree, term count, grlex-lex over terms).
  static bool deterministic_less(const Polynomial& a, const Polynomial& b);

  Polynomial derivative(int var) const;

  /// Exact evaluation; every mentioned variable must be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  /// Fast double evaluation against a state vector indexed by the VarOrder.
  double evaluate(const double* state) const;

  /// Divide leading-coefficient out so it becomes 1.
  Polynomial monic() const;
  /// Scale so coefficients are coprime integers with positive leading one.
  Polynomial primitive_integer() const;

  void add_term(const Monomial& m, const Rational& c);  // merges, drops zeros

  std::string str() const;

 private:
  VarsPtr vars_;
  TermMap terms_;
  void check_compatible(const Polynomial& o) const;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

/// q with num = q*den exactly, or nullopt. Throws ZeroDivisorError if den = 0.
std::optional<Polynomial> try_divide(const Polynomial& num, const Polynomial& den);

/// Polynomial vector field over a shared VarOrder. Entries may be unassigned
/// so that sub-systems (e.g. the closed (g,h,e) dynamics) are expressible.
struct VectorField {
  VarsPtr vars;
  std::vector<std::optional<Polynomial>> rhs;

  explicit VectorField(VarsPtr v) : vars(std::move(v)), rhs(vars->size()) {}

  void assign(const std::string& name, Polynomial p);
  const Polynomial& rhs_of(int var) const;  // throws UnknownVariableError
  bool assigned(int var) const { return var >= 0 && var < (int)rhs.size() && rhs[var].has_value(); }

  /// true if every assigned rhs of `subset` mentions only subset variables.
  bool closed_on(const std::vector<int>& subset) const;
};

/// Σ_i ∂p/∂x_i · f_i. Throws UnknownVariableError if p mentions a variable
/// without an assigned derivative.
Polynomial lie_derivative(const Polynomial& p, const VectorField& f);

}  // namespace hykeep
