/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/expr.hpp"

#include <cmath>
#include <sstream>

namespace hykeep {

namespace {
ExprPtr make_node(Expr::Kind k, VarsPtr vars) {
  struct Access : Expr {};
  auto n = std::make_shared<Access>();
  n->kind = k;
  n->vars = std::move(vars);
  return n;
}
}  // namespace

ExprPtr Expr::make_poly(Polynomial p) {
  auto n = make_node(Kind::Poly, p.vars());
  const_cast<Expr&>(*n).poly = std::move(p);
  return n;
}

ExprPtr Expr::make_const(VarsPtr vars, const Rational& c) {
  return make_poly(Polynomial::constant(std::move(vars), c));
}

ExprPtr Expr::make_var(VarsPtr vars, const std::string& name) {
  return make_poly(Polynomial::variable(std::move(vars), name));
}

ExprPtr Expr::make_pi(VarsPtr vars, const Rational& mult) {
  if (is_zero(mult)) return make_const(std::move(vars), Rational(0));
  auto n = make_node(Kind::Pi, std::move(vars));
  const_cast<Expr&>(*n).pi_mult = mult;
  return n;
}

ExprPtr Expr::make_sin(VarsPtr vars, int var) {
  auto n = make_node(Kind::Sin, std::move(vars));
  const_cast<Expr&>(*n).trig_var = var;
  return n;
}

ExprPtr Expr::make_cos(VarsPtr vars, int var) {
  auto n = make_node(Kind::Cos, std::move(vars));
  const_cast<Expr&>(*n).trig_var = var;
  return n;
}

ExprPtr Expr::add(ExprPtr a, ExprPtr b) {
  if (a->is_poly() && b->is_poly()) return make_poly(a->poly + b->poly);
  if (a->is_poly() && a->poly.is_zero()) return b;
  if (b->is_poly() && b->poly.is_zero()) return a;
  auto n = make_node(Kind::Sum, a->vars ? a->vars : b->vars);
  auto& kids = const_cast<Expr&>(*n).kids;
  for (const auto& e : {a, b}) {
    if (e->kind == Kind::Sum)
      kids.insert(kids.end(), e->kids.begin(), e->kids.end());
    else
      kids.push_back(e);
  }
  return n;
}

ExprPtr Expr::sub(ExprPtr a, ExprPtr b) { return add(std::move(a), neg(std::move(b))); }

ExprPtr Expr::mul(ExprPtr a, ExprPtr b) {
  if (a->is_poly() && b->is_poly()) return make_poly(a->poly * b->poly);
  if (a->is_poly() && a->poly.is_zero()) return a;
  if (b->is_poly() && b->poly.is_zero()) return b;
  auto n = make_node(Kind::Prod, a->vars ? a->vars : b->vars);
  auto& kids = const_cast<Expr&>(*n).kids;
  for (const auto& e : {a, b}) {
    if (e->kind == Kind::Prod)
      kids.insert(kids.end(), e->kids.begin(), e->kids.end());
    else
      kids.push_back(e);
  }
  return n;
}

ExprPtr Expr::neg(ExprPtr a) {
  if (a->is_poly()) return make_poly(-a->poly);
  if (a->kind == Kind::Neg) return a->kids[0];
  if (a->kind == Kind::Pi) return make_pi(a->vars, -a->pi_mult);
  auto n = make_node(Kind::Neg, a->vars);
  const_cast<Expr&>(*n).kids.push_back(std::move(a));
  return n;
}

ExprPtr Expr::quot(ExprPtr num, ExprPtr den) {
  if (den->is_poly() && den->poly.is_zero())
    throw DivisionByZeroError("quotient with syntactically zero denominator");
  if (den->is_poly() && den->poly.is_constant())
    return mul(std::move(num),
               make_const(den->vars, Rational(1) / den->poly.constant_value()));
  auto n = make_node(Kind::Quot, num->vars ? num->vars : den->vars);
  auto& e = const_cast<Expr&>(*n);
  e.kids.push_back(std::move(num));
  e.kids.push_back(std::move(den));
  return n;
}

ExprPtr Expr::pow(ExprPtr a, unsigned e) {
  if (a->is_poly()) return make_poly(a->poly.pow(e));
  ExprPtr r = make_const(a->vars, Rational(1));
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

std::optional<Polynomial> Expr::as_polynomial() const {
  switch (kind) {
    case Kind::Poly:
      return poly;
    case Kind::Neg: {
      auto k = kids[0]->as_polynomial();
      if (!k) return std::nullopt;
      return -*k;
    }
    case Kind::Sum: {
      Polynomial acc(vars);
      for (const auto& k : kids) {
        auto p = k->as_polynomial();
        if (!p) return std::nullopt;
        acc = acc + *p;
      }
      return acc;
    }
    case Kind::Prod: {
      Polynomial acc = Polynomial::constant(vars, Rational(1));
      for (const auto& k : kids) {
        auto p = k->as_polynomial();
        if (!p) return std::nullopt;
        acc = acc * *p;
      }
      return acc;
    }
    case Kind::Quot: {
      auto n = kids[0]->as_polynomial();
      auto d = kids[1]->as_polynomial();
      if (!n || !d) return std::nullopt;
      if (d->is_zero()) throw DivisionByZeroError("zero denominator");
      if (d->is_constant()) return *n * (Rational(1) / d->constant_value());
      auto q = try_divide(*n, *d);
      if (q) return q;
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

std::optional<std::pair<Polynomial, Polynomial>> Expr::as_rational_function() const {
  auto one = [&] { return Polynomial::constant(vars, Rational(1)); };
  switch (kind) {
    case Kind::Poly:
      return std::make_pair(poly, one());
    case Kind::Neg: {
      auto k = kids[0]->as_rational_function();
      if (!k) return std::nullopt;
      return std::make_pair(-k->first, k->second);
    }
    case Kind::Sum: {
      Polynomial n(vars), d = one();
      n = Polynomial::constant(vars, Rational(0));
      for (const auto& kid : kids) {
        auto k = kid->as_rational_function();
        if (!k) return std::nullopt;
        n = n * k->second + k->first * d;
        d = d * k->second;
      }
      return std::make_pair(n, d);
    }
    case Kind::Prod: {
      Polynomial n = one(), d = one();
      for (const auto& kid : kids) {
        auto k = kid->as_rational_function();
        if (!k) return std::nullopt;
        n = n * k->first;
        d = d * k->second;
      }
      return std::make_pair(n, d);
    }
    case Kind::Quot: {
      auto kn = kids[0]->as_rational_function();
      auto kd = kids[1]->as_rational_function();
      if (!kn || !kd) return std::nullopt;
      if (kd->first.is_zero()) throw DivisionByZeroError("zero denominator");
      return std::make_pair(kn->first * kd->second, kn->second * kd->first);
    }
    default:
      return std::nullopt;
  }
}

bool Expr::contains_trig() const {
  if (kind == Kind::Sin || kind == Kind::Cos) return true;
  for (const auto& k : kids)
    if (k->contains_trig()) return true;
  return false;
}

bool Expr::contains_pi() const {
  if (kind == Kind::Pi) return true;
  for (const auto& k : kids)
    if (k->contains_pi()) return true;
  return false;
}

bool Expr::mentions(int var) const {
  switch (kind) {
    case Kind::Poly:
      return poly.mentions(var);
    case Kind::Sin:
    case Kind::Cos:
      return trig_var == var;
    case Kind::Pi:
      return false;
    default:
      for (const auto& k : kids)
        if (k->mentions(var)) return true;
      return false;
  }
}

Rational Expr::evaluate_exact(const std::map<std::string, Rational>& point) const {
  switch (kind) {
    case Kind::Poly:
      return poly.evaluate(point);
    case Kind::Pi:
      throw NonRationalValueError("pi has no exact rational value");
    case Kind::Sin:
    case Kind::Cos:
      throw NonRationalValueError("sin/cos have no exact rational value");
    case Kind::Neg:
      return -kids[0]->evaluate_exact(point);
    case Kind::Sum: {
      Rational acc(0);
      for (const auto& k : kids) acc += k->evaluate_exact(point);
      return acc;
    }
    case Kind::Prod: {
      Rational acc(1);
      for (const auto& k : kids) acc *= k->evaluate_exact(point);
      return acc;
    }
    case Kind::Quot: {
      Rational den = kids[1]->evaluate_exact(point);
      if (is_zero(den)) throw DivisionByZeroError("denominator evaluates to zero");
      return kids[0]->evaluate_exact(point) / den;
    }
  }
  throw std::logic_error("unreachable");
}

double Expr::evaluate(const double* state) const {
  switch (kind) {
    case Kind::Poly:
      return poly.evaluate(state);
    case Kind::Pi:
      return pi_mult.get_d() * M_PI;
    case Kind::Sin:
      return std::sin(state[trig_var]);
    case Kind::Cos:
      return std::cos(state[trig_var]);
    case Kind::Neg:
      return -kids[0]->evaluate(state);
    case Kind::Sum: {
      double acc = 0;
      for (const auto& k : kids) acc += k->evaluate(state);
      return acc;
    }
    case Kind::Prod: {
      double acc = 1;
      for (const auto& k : kids) acc *= k->evaluate(state);
      return acc;
    }
    case Kind::Quot: {
      double den = kids[1]->evaluate(state);
      if (den == 0) throw DivisionByZeroError("denominator evaluates to zero");
      return kids[0]->evaluate(state) / den;
    }
  }
  throw std::logic_error("unreachable");
}

ExprPtr Expr::lie(const VectorField& f) const {
  switch (kind) {
    case Kind::Poly:
      return make_poly(lie_derivative(poly, f));
    case Kind::Pi:
      return make_const(vars, Rational(0));
    case Kind::Sin: {
      // d/dt sin(x) = cos(x) * x'
      return mul(make_cos(vars, trig_var), make_poly(f.rhs_of(trig_var)));
    }
    case Kind::Cos: {
      return neg(mul(make_sin(vars, trig_var), make_poly(f.rhs_of(trig_var))));
    }
    case Kind::Neg:
      return neg(kids[0]->lie(f));
    case Kind::Sum: {
      ExprPtr acc = make_const(vars, Rational(0));
      for (const auto& k : kids) acc = add(acc, k->lie(f));
      return acc;
    }
    case Kind::Prod: {
      ExprPtr acc = make_const(vars, Rational(0));
      for (size_t i = 0; i < kids.size(); ++i) {
        ExprPtr term = kids[i]->lie(f);
        for (size_t j = 0; j < kids.size(); ++j)
          if (j != i) term = mul(term, kids[j]);
        acc = add(acc, term);
      }
      return acc;
    }
    case Kind::Quot: {
      // (n/d)' = (n' d - n d') / d^2
      ExprPtr n = kids[0], d = kids[1];
      ExprPtr num = sub(mul(n->lie(f), d), mul(n, d->lie(f)));
      return quot(num, mul(d, d));
    }
  }
  throw std::logic_error("unreachable");
}

std::string Expr::str() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::Poly: {
      bool wrap = poly.term_count() > 1;
      if (wrap) out << "(";
      out << poly.str();
      if (wrap) out << ")";
      break;
    }
    case Kind::Pi:
      if (pi_mult == 1)
        out << "pi";
      else if (pi_mult.get_den() == 1)
        out << pi_mult.get_str() << "*pi";
      else
        out << pi_mult.get_num().get_str() << "*pi/" << pi_mult.get_den().get_str();
      break;
    case Kind::Sin:
      out << "sin(" << vars->name(trig_var) << ")";
      break;
    case Kind::Cos:
      out << "cos(" << vars->name(trig_var) << ")";
      break;
    case Kind::Neg:
      out << "-" << kids[0]->str();
      break;
    case Kind::Sum: {
      out << "(";
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out << " + ";
        out << kids[i]->str();
      }
      out << ")";
      break;
    }
    case Kind::Prod: {
      for (size_t i = 0; i < kids.size(); ++i) {
        if (i) out << "*";
        out << kids[i]->str();
      }
      break;
    }
    case Kind::Quot:
      out << kids[0]->str() << "/(" << kids[1]->str() << ")";
      break;
  }
  return out.str();
}

bool Expr::equals(const Expr& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Poly:
      return poly == o.poly;
    case Kind::Pi:
      return pi_mult == o.pi_mult;
    case Kind::Sin:
    case Kind::Cos:
      return trig_var == o.trig_var;
    default: {
      if (kids.size() != o.kids.size()) return false;
      for (size_t i = 0; i < kids.size(); ++i)
        if (!kids[i]->equals(*o.kids[i])) return false;
      return true;
    }
  }
}

std::optional<PiAffine> try_pi_affine(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Poly:
      return PiAffine{e.poly, Rational(0)};
    case Expr::Kind::Pi:
      return PiAffine{Polynomial(e.vars), e.pi_mult};
    case Expr::Kind::Neg: {
      auto k = try_pi_affine(*e.kids[0]);
      if (!k) return std::nullopt;
      return PiAffine{-k->poly, -k->pi_coeff};
    }
    case Expr::Kind::Sum: {
      PiAffine acc{Polynomial(e.vars), Rational(0)};
      for (const auto& kid : e.kids) {
        auto k = try_pi_affine(*kid);
        if (!k) return std::nullopt;
        acc.poly = acc.poly + k->poly;
        acc.pi_coeff += k->pi_coeff;
      }
      return acc;
    }
    case Expr::Kind::Prod: {
      // only rational-constant * affine products stay affine
      PiAffine acc{Polynomial::constant(e.vars, Rational(1)), Rational(0)};
      bool seen_affine = false;
      Rational scale(1);
      std::optional<PiAffine> affine;
      for (const auto& kid : e.kids) {
        auto k = try_pi_affine(*kid);
        if (!k) return std::nullopt;
        bool is_const = k->poly.is_constant() && is_zero(k->pi_coeff);
        if (is_const) {
          scale *= k->poly.constant_value();
        } else if (!seen_affine) {
          seen_affine = true;
          affine = *k;
        } else {
          return std::nullopt;
        }
      }
      if (!affine) return PiAffine{Polynomial::constant(e.vars, scale), Rational(0)};
      return PiAffine{affine->poly * scale, affine->pi_coeff * scale};
    }
    default:
      return std::nullopt;
  }
}

}  // namespace hykeep
