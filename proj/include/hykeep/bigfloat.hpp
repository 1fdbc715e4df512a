/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <vector>

#include "hykeep/expr.hpp"

namespace hykeep::bigfloat {

/// Double bounds of pi: pi_lo() < pi < pi_hi(), adjacent representables.
double pi_lo();
double pi_hi();

/// q*pi enclosed in doubles (outward).
std::pair<double, double> pi_multiple(const Rational& q);

/// Directed rational -> double.
double to_double(const Rational& q, bool round_up);

/// sqrt(r) enclosed in doubles (outward); r >= 0.
std::pair<double, double> sqrt_enclosure(const Rational& r);

/// Exact sign of a + b*pi (<0, 0, >0). 0 only when a = b = 0.
int sign_pi_affine(const Rational& a, const Rational& b);

/// High-precision enclosure of an Expr at an exact rational point, as a
/// double interval [lo, hi]. `prec` is the working precision in bits.
/// Returns nullopt if a quotient denominator straddles zero at this point.
std::optional<std::pair<double, double>> eval_enclosure(
    const Expr& e, const std::vector<Rational>& point, long prec = 128);

}  // namespace hykeep::bigfloat
