/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "hykeep/expr.hpp"

namespace hykeep {

struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// p with lie(p) = cofactor * p exactly. p is non-constant and monic under
/// grlex. (The cofactor of a fixed p is unique, since the term ring has no
/// zero divisors.)
struct DarbouxPair {
  Polynomial p;
  Polynomial cofactor;
};

/// Product of pairs' polynomials with integer exponents whose cofactors
/// cancel: expr = prod p_i^lambda_i, stored as a quotient of polynomials.
struct FirstIntegral {
  ExprPtr expr;
  Polynomial numerator;
  Polynomial denominator;  // constant 1 when all exponents are nonnegative
  std::vector<long> exponents;
  std::vector<DarbouxPair> sources;
};

struct SearchOptions {
  std::vector<Rational> coefficients = {rat(-2), rat(-1), rat(1), rat(2)};
  int max_terms = 2;
  size_t enumeration_cap = 1'000'000;
};

/// All candidate cofactors over `vars_subset`: polynomials with at most
/// `max_terms` monomials of total degree in [1, maxdeg] and coefficients from
/// the given set, plus the zero polynomial. Deterministic, duplicate-free.
std::vector<Polynomial> enumerate_cofactors(int maxdeg,
                                            const std::vector<Rational>& coefficients,
                                            int max_terms,
                                            const VarsPtr& vars,
                                            const std::vector<int>& vars_subset,
                                            size_t cap = 1'000'000);

/// Fix each enumerated cofactor c and solve the linear system
/// lie(p) - c*p = 0 in the coefficients of the degree <= pdeg template for p
/// by exact elimination over the rationals. Constants are excluded, products
/// of two found polynomials are suppressed, output is sorted
/// by (degree, term count, grlex).
std::vector<DarbouxPair> darboux_search(const VectorField& f, int pdeg, int cofdeg,
                                        const std::vector<int>& vars_subset,
                                        const SearchOptions& opt = {});

/// lie(p, f) == cofactor * p, by exact arithmetic.
bool darboux_verify(const DarbouxPair& pair, const VectorField& f);

/// Integer nullspace of the cofactor matrix; each primitive nullspace vector
/// yields one first integral. Identically-constant results are discarded.
std::vector<FirstIntegral> first_integrals(const std::vector<DarbouxPair>& pairs);

}  // namespace hykeep
