/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <vector>

#include "hykeep/polynomial.hpp"

namespace hykeep {

/// Rewriting modulo a set of polynomial equalities of recognized shapes:
///   monomial = constant        (e.g. e*d - 1 = 0, 2h^2 - 1 = 0)
///   x = linear polynomial      (e.g. h + g = 0)
///   x^2 + y^2 = constant       (circle; eliminates the later variable)
/// Unrecognized equalities are ignored (reduction stays sound: rewriting only
/// uses consequences of the given relations).
class RewriteSystem {
 public:
  RewriteSystem() = default;
  explicit RewriteSystem(const std::vector<Polynomial>& equalities);

  void add_equality(const Polynomial& p);

  Polynomial reduce(const Polynomial& p) const;
  bool reduces_to_zero(const Polynomial& p) const { return reduce(p).is_zero(); }
  bool empty() const { return mono_rules_.empty() && linear_rules_.empty() && square_rules_.empty(); }

 private:
  struct MonoRule {           // m -> c
    Monomial m;
    Rational c;
  };
  struct LinearRule {         // var -> poly
    int var;
    Polynomial to;
  };
  struct SquareRule {         // var^2 -> poly
    int var;
    Polynomial to;
  };
  std::vector<MonoRule> mono_rules_;
  std::vector<LinearRule> linear_rules_;
  std::vector<SquareRule> square_rules_;
};

}  // namespace hykeep
