/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hykeep/expr.hpp"

namespace hykeep {

struct DivisionIntervalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Closed double interval with outward-rounded arithmetic. Operations whose
/// floating-point result is provably exact (checked with error-free
/// transformations) are not inflated, so identities like [-1,1]+1 = [0,2]
/// stay sharp; everything else widens to the adjacent representables.
struct Interval {
  double lo = 0, hi = 0;

  static Interval point(double x) { return {x, x}; }
  static Interval make(double lo, double hi);

  double width() const { return hi - lo; }
  double mid() const;
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  std::optional<Interval> intersect(const Interval& o) const;
  Interval hull(const Interval& o) const;
  std::string str() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws DivisionIntervalError when b straddles 0.
Interval operator/(const Interval& a, const Interval& b);
Interval pow_i(const Interval& a, unsigned k);
Interval sin_iv(const Interval& a);
Interval cos_iv(const Interval& a);
Interval sqrt_iv(const Interval& a);  // clamps negative part to 0

double next_down(double x);
double next_up(double x);

/// Axis-aligned box over a VarOrder; all bounds finite.
struct Box {
  VarsPtr vars;
  std::vector<Interval> iv;

  Box() = default;
  explicit Box(VarsPtr v) : vars(std::move(v)), iv(vars->size(), Interval{0, 0}) {}

  Interval& of(const std::string& name) { return iv.at(vars->require(name)); }
  const Interval& of(const std::string& name) const { return iv.at(vars->require(name)); }

  /// Default certification domain for the station-keeping study.
  static Box station_keeping_default(const VarsPtr& vars);

  std::string str() const;
};

/// Enclosure of e over the box. Evaluates the tree as written (no expansion),
/// so factored forms keep their sharpness. Throws DivisionIntervalError if a
/// quotient denominator straddles zero over the box.
Interval interval_eval(const Expr& e, const Box& b);
Interval interval_eval(const Polynomial& p, const Box& b);

}  // namespace hykeep
