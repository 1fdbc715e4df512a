/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "hykeep/semialg.hpp"

namespace hykeep {

/// One control branch: the substitution for u, the closed-form field with u
/// eliminated, and the evolution domain.
struct Mode {
  std::string name;
  Polynomial control;
  VectorField field;
  SemialgSet domain;
};

/// Switched polynomial system plus the coherence predicate tying the
/// algebraic abstraction (g, h, e) to the trigonometric/polar originals.
struct HybridSystem {
  VarsPtr vars;
  std::vector<Mode> modes;
  SemialgSet coherence;

  const Mode& mode(const std::string& name) const;
};

/// Expression-valued field; used for the Cartesian model whose right-hand
/// sides contain sin/cos nodes. Simulation only.
struct ExprField {
  VarsPtr vars;
  std::vector<ExprPtr> rhs;
};

/// The planar vehicle in polar-algebraic form: two modes
///   constant     u = 1,  domain d > 0 and (g <= 0 or 2g^2 <= 1)
///   proportional u = -h, domain d > 0 and (g > 0 and 2g^2 > 1)
/// with coherence g^2 + h^2 = 1, e*d = 1, d > 0. The sqrt(2)/2 guard
/// threshold is kept polynomial through the squared encoding.
HybridSystem station_keeping_model(bool with_alpha = false);

/// Base field of the turn dynamics with u left symbolic, i.e. the rhs map
/// for (g, h, e, d, phi) given a concrete control polynomial.
VectorField turn_field(const Polynomial& control, const VarsPtr& vars);

/// Cartesian kinematics (x, y, theta): (cos theta, sin theta, u).
ExprField cartesian_model(const ExprPtr& u);
VarsPtr cartesian_vars();

const Mode& constant_mode(const HybridSystem& sys);
const Mode& proportional_mode(const HybridSystem& sys);

inline const VectorField& mode_vector_field(const Mode& m) { return m.field; }

/// Coherence predicate Delta as a set.
SemialgSet coherence_predicate(const VarsPtr& vars);

/// (1 + 2eh) / e^2 — the conserved quantity of the constant-turn mode.
ExprPtr constant_mode_invariant(const VarsPtr& vars);
/// d^2 + 2dh — the polynomial form, equal on the ed = 1 variety.
Polynomial invariant_polynomial(const VarsPtr& vars);

/// Pose conversions. phi is reduced to [0, 2*pi).
struct PolarState {
  double d, phi, alpha;
};
PolarState polar_from_cartesian(double x, double y, double theta);
void cartesian_from_polar(const PolarState& p, double& x, double& y, double& theta);

// --- JSON model format ----------------------------------------------------

std::string model_to_json(const HybridSystem& sys);
HybridSystem model_from_json(const std::string& json_text);

}  // namespace hykeep
