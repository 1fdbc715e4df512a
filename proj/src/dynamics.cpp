/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/dynamics.hpp"

#include <cmath>

#include <json.hpp>

#include "hykeep/parse.hpp"

namespace hykeep {

using json = nlohmann::ordered_json;

const Mode& HybridSystem::mode(const std::string& name) const {
  for (const auto& m : modes)
    if (m.name == name) return m;
  throw std::invalid_argument("no mode named " + name);
}

VectorField turn_field(const Polynomial& control, const VarsPtr& vars) {
  auto var = [&](const char* n) { return Polynomial::variable(vars, n); };
  Polynomial g = var("g"), h = var("h"), e = var("e");
  Polynomial omega = h * e + control;  // angular rate he + u
  VectorField f(vars);
  f.assign("g", -(omega * h));
  f.assign("h", omega * g);
  f.assign("e", g * e * e);
  f.assign("d", -g);
  f.assign("phi", omega);
  if (vars->index("alpha") >= 0) f.assign("alpha", -(h * e));
  return f;
}

SemialgSet coherence_predicate(const VarsPtr& vars) {
  auto var = [&](const char* n) { return Polynomial::variable(vars, n); };
  Polynomial g = var("g"), h = var("h"), e = var("e"), d = var("d");
  Polynomial one = Polynomial::constant(vars, Rational(1));
  return SemialgSet::conj({
      SemialgSet::atom(atom_eq(Expr::make_poly(g * g + h * h - one))),
      SemialgSet::atom(atom_eq(Expr::make_poly(e * d - one))),
      SemialgSet::atom(atom_gt(Expr::make_poly(d))),
  });
}

namespace {

// 2g <= sqrt(2)  <=>  g <= 0  or  2g^2 <= 1
SemialgSet guard_left_turn(const VarsPtr& vars) {
  Polynomial g = Polynomial::variable(vars, "g");
  Polynomial one = Polynomial::constant(vars, Rational(1));
  return SemialgSet::disj({
      SemialgSet::atom(atom_le(Expr::make_poly(g))),
      SemialgSet::atom(atom_le(Expr::make_poly(g * g * Rational(2) - one))),
  });
}

// 2g > sqrt(2)  <=>  g > 0 and 2g^2 > 1
SemialgSet guard_homing(const VarsPtr& vars) {
  Polynomial g = Polynomial::variable(vars, "g");
  Polynomial one = Polynomial::constant(vars, Rational(1));
  return SemialgSet::conj({
      SemialgSet::atom(atom_gt(Expr::make_poly(g))),
      SemialgSet::atom(atom_gt(Expr::make_poly(g * g * Rational(2) - one))),
  });
}

SemialgSet positive_radius(const VarsPtr& vars) {
  return SemialgSet::atom(atom_gt(Expr::make_poly(Polynomial::variable(vars, "d"))));
}

}  // namespace

HybridSystem station_keeping_model(bool with_alpha) {
  VarsPtr vars = VarOrder::station_keeping(with_alpha);
  Polynomial one = Polynomial::constant(vars, Rational(1));
  Polynomial h = Polynomial::variable(vars, "h");

  Mode constant{"constant", one, turn_field(one, vars),
                positive_radius(vars) && guard_left_turn(vars)};
  Mode proportional{"proportional", -h, turn_field(-h, vars),
                    positive_radius(vars) && guard_homing(vars)};

  HybridSystem sys{vars, {std::move(constant), std::move(proportional)},
                   coherence_predicate(vars)};
  return sys;
}

VarsPtr cartesian_vars() {
  static const VarsPtr v =
      std::make_shared<VarOrder>(std::vector<std::string>{"x", "y", "theta"});
  return v;
}

ExprField cartesian_model(const ExprPtr& u) {
  VarsPtr vars = cartesian_vars();
  int theta = vars->require("theta");
  ExprField f{vars, {}};
  f.rhs.resize(vars->size());
  f.rhs[vars->require("x")] = Expr::make_cos(vars, theta);
  f.rhs[vars->require("y")] = Expr::make_sin(vars, theta);
  f.rhs[theta] = u;
  return f;
}

const Mode& constant_mode(const HybridSystem& sys) { return sys.mode("constant"); }
const Mode& proportional_mode(const HybridSystem& sys) { return sys.mode("proportional"); }

ExprPtr constant_mode_invariant(const VarsPtr& vars) {
  Polynomial e = Polynomial::variable(vars, "e");
  Polynomial h = Polynomial::variable(vars, "h");
  Polynomial one = Polynomial::constant(vars, Rational(1));
  return Expr::quot(Expr::make_poly(one + Rational(2) * e * h),
                    Expr::make_poly(e * e));
}

Polynomial invariant_polynomial(const VarsPtr& vars) {
  Polynomial d = Polynomial::variable(vars, "d");
  Polynomial h = Polynomial::variable(vars, "h");
  return d * d + Rational(2) * d * h;
}

PolarState polar_from_cartesian(double x, double y, double theta) {
  PolarState p;
  p.d = std::hypot(x, y);
  p.alpha = std::atan2(y, x);
  double phi = M_PI + theta - p.alpha;
  double two_pi = 2 * M_PI;
  phi = std::fmod(phi, two_pi);
  if (phi < 0) phi += two_pi;
  p.phi = phi;
  return p;
}

void cartesian_from_polar(const PolarState& p, double& x, double& y, double& theta) {
  x = p.d * std::cos(p.alpha);
  y = p.d * std::sin(p.alpha);
  theta = p.phi + p.alpha - M_PI;
}

std::string model_to_json(const HybridSystem& sys) {
  json j;
  j["variables"] = sys.vars->names();
  j["modes"] = json::array();
  for (const auto& m : sys.modes) {
    json jm;
    jm["name"] = m.name;
    jm["control"] = m.control.str();
    json field;
    for (int i = 0; i < sys.vars->size(); ++i)
      if (m.field.assigned(i)) field[sys.vars->name(i)] = m.field.rhs[i]->str();
    jm["field"] = field;
    jm["domain"] = m.domain.str();
    j["modes"].push_back(jm);
  }
  j["coherence"] = sys.coherence.str();
  return j.dump(2);
}

HybridSystem model_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  VarsPtr vars = std::make_shared<VarOrder>(
      j.at("variables").get<std::vector<std::string>>());
  HybridSystem sys{vars, {}, SemialgSet::top()};
  for (const auto& jm : j.at("modes")) {
    VectorField f(vars);
    for (const auto& [name, rhs] : jm.at("field").items())
      f.assign(name, parse_polynomial(rhs.get<std::string>(), vars));
    sys.modes.push_back(Mode{
        jm.at("name").get<std::string>(),
        parse_polynomial(jm.at("control").get<std::string>(), vars),
        std::move(f),
        parse_set(jm.at("domain").get<std::string>(), vars),
    });
  }
  sys.coherence = parse_set(j.at("coherence").get<std::string>(), vars);
  return sys;
}

}  // namespace hykeep
