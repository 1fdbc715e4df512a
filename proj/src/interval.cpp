/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hykeep/bigfloat.hpp"

namespace hykeep {

double next_down(double x) {
  if (std::isinf(x)) return x;
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

double next_up(double x) {
  if (std::isinf(x)) return x;
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

namespace {

// TwoSum: a+b is exact iff the rounding error term is zero.
bool add_exact(double a, double b, double s) {
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return err == 0;
}

bool mul_exact(double a, double b, double p) { return std::fma(a, b, -p) == 0; }

double add_down(double a, double b) {
  double s = a + b;
  return add_exact(a, b, s) ? s : next_down(s);
}
double add_up(double a, double b) {
  double s = a + b;
  return add_exact(a, b, s) ? s : next_up(s);
}
double mul_down(double a, double b) {
  double p = a * b;
  return mul_exact(a, b, p) ? p : next_down(p);
}
double mul_up(double a, double b) {
  double p = a * b;
  return mul_exact(a, b, p) ? p : next_up(p);
}
double div_down(double a, double b) {
  double q = a / b;
  return mul_exact(q, b, a) ? q : next_down(q);
}
double div_up(double a, double b) {
  double q = a / b;
  return mul_exact(q, b, a) ? q : next_up(q);
}

// libm sin/cos on this platform are within 1-2 ulp; widen accordingly.
double trig_down(double v) { return std::max(-1.0, next_down(next_down(v))); }
double trig_up(double v) { return std::min(1.0, next_up(next_up(v))); }

}  // namespace

Interval Interval::make(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("interval with lo > hi");
  return {lo, hi};
}

double Interval::mid() const {
  double m = 0.5 * (lo + hi);
  if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
  if (m < lo) m = lo;
  if (m > hi) m = hi;
  return m;
}

std::optional<Interval> Interval::intersect(const Interval& o) const {
  double l = std::max(lo, o.lo), h = std::min(hi, o.hi);
  if (l > h) return std::nullopt;
  return Interval{l, h};
}

Interval Interval::hull(const Interval& o) const {
  return {std::min(lo, o.lo), std::max(hi, o.hi)};
}

std::string Interval::str() const {
  std::ostringstream out;
  out.precision(17);
  out << "[" << lo << ", " << hi << "]";
  return out.str();
}

Interval operator+(const Interval& a, const Interval& b) {
  return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)};
}

Interval operator-(const Interval& a, const Interval& b) {
  return {add_down(a.lo, -b.hi), add_up(a.hi, -b.lo)};
}

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  double cd[4] = {mul_down(a.lo, b.lo), mul_down(a.lo, b.hi), mul_down(a.hi, b.lo),
                  mul_down(a.hi, b.hi)};
  double cu[4] = {mul_up(a.lo, b.lo), mul_up(a.lo, b.hi), mul_up(a.hi, b.lo),
                  mul_up(a.hi, b.hi)};
  return {*std::min_element(cd, cd + 4), *std::max_element(cu, cu + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero())
    throw DivisionIntervalError("denominator interval contains zero: " + b.str());
  double qd[4] = {div_down(a.lo, b.lo), div_down(a.lo, b.hi), div_down(a.hi, b.lo),
                  div_down(a.hi, b.hi)};
  double qu[4] = {div_up(a.lo, b.lo), div_up(a.lo, b.hi), div_up(a.hi, b.lo),
                  div_up(a.hi, b.hi)};
  return {*std::min_element(qd, qd + 4), *std::max_element(qu, qu + 4)};
}

Interval pow_i(const Interval& a, unsigned k) {
  if (k == 0) return Interval::point(1);
  if (k == 1) return a;
  // powers of nonnegative magnitudes keep a consistent rounding direction
  auto mag_down = [&](double m) {
    double r = 1;
    for (unsigned i = 0; i < k; ++i) r = mul_down(r, m);
    return r;
  };
  auto mag_up = [&](double m) {
    double r = 1;
    for (unsigned i = 0; i < k; ++i) r = mul_up(r, m);
    return r;
  };
  bool even = (k % 2u) == 0;
  if (even) {
    if (a.lo >= 0) return {mag_down(a.lo), mag_up(a.hi)};
    if (a.hi <= 0) return {mag_down(-a.hi), mag_up(-a.lo)};
    return {0, std::max(mag_up(-a.lo), mag_up(a.hi))};
  }
  double lo = a.lo < 0 ? -mag_up(-a.lo) : mag_down(a.lo);
  double hi = a.hi < 0 ? -mag_down(-a.hi) : mag_up(a.hi);
  return {lo, hi};
}

namespace {

// Extrema candidates k*pi (cos) or pi/2 + k*pi (sin) possibly inside [a, b].
Interval trig_range(const Interval& a, bool is_sin) {
  const double PL = bigfloat::pi_lo(), PH = bigfloat::pi_hi();
  if (a.width() >= 2 * PH) return {-1, 1};
  double vlo1 = trig_down(is_sin ? std::sin(a.lo) : std::cos(a.lo));
  double vhi1 = trig_up(is_sin ? std::sin(a.lo) : std::cos(a.lo));
  double vlo2 = trig_down(is_sin ? std::sin(a.hi) : std::cos(a.hi));
  double vhi2 = trig_up(is_sin ? std::sin(a.hi) : std::cos(a.hi));
  Interval r{std::min(vlo1, vlo2), std::max(vhi1, vhi2)};

  // conservative scan over candidate extremum indices
  long k0 = static_cast<long>(std::floor(a.lo / PL)) - 2;
  long k1 = static_cast<long>(std::ceil(a.hi / PL)) + 2;
  for (long k = k0; k <= k1; ++k) {
    // extremum location x = k*pi (+ pi/2 for sin), enclosed in doubles
    double xlo, xhi;
    double kl = static_cast<double>(k);
    if (k >= 0) {
      xlo = mul_down(kl, PL);
      xhi = mul_up(kl, PH);
    } else {
      xlo = mul_down(kl, PH);
      xhi = mul_up(kl, PL);
    }
    if (is_sin) {
      xlo = add_down(xlo, mul_down(0.5, PL));
      xhi = add_up(xhi, mul_up(0.5, PH));
    }
    if (xhi < a.lo || xlo > a.hi) continue;
    // cos extremum at k*pi has value (-1)^k; sin extremum at pi/2+k*pi too
    bool maximum = (k % 2) == 0;
    if (maximum)
      r.hi = 1;
    else
      r.lo = -1;
  }
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

}  // namespace

Interval sin_iv(const Interval& a) { return trig_range(a, true); }
Interval cos_iv(const Interval& a) { return trig_range(a, false); }

Interval sqrt_iv(const Interval& a) {
  if (a.hi < 0) throw std::domain_error("sqrt of negative interval");
  double lo = a.lo <= 0 ? 0 : next_down(std::sqrt(a.lo));
  double hi = next_up(std::sqrt(a.hi));
  if (lo < 0) lo = 0;
  return {lo, hi};
}

Box Box::station_keeping_default(const VarsPtr& vars) {
  Box b(vars);
  for (int i = 0; i < vars->size(); ++i) b.iv[i] = {-1e6, 1e6};
  if (vars->index("g") >= 0) b.of("g") = {-1, 1};
  if (vars->index("h") >= 0) b.of("h") = {-1, 1};
  if (vars->index("e") >= 0) b.of("e") = {1e-2, 1e3};
  if (vars->index("d") >= 0) b.of("d") = {1e-3, 1e2};
  if (vars->index("phi") >= 0) b.of("phi") = {0, next_up(2 * bigfloat::pi_hi())};
  if (vars->index("alpha") >= 0) b.of("alpha") = {-1e3, 1e3};
  return b;
}

std::string Box::str() const {
  std::ostringstream out;
  for (int i = 0; i < vars->size(); ++i) {
    if (i) out << " ";
    out << vars->name(i) << "=" << iv[i].str();
  }
  return out.str();
}

Interval interval_eval(const Polynomial& p, const Box& b) {
  Interval acc{0, 0};
  for (const auto& [m, c] : p.terms()) {
    double cd = c.get_d();
    Interval t = Interval::point(cd);
    if (Rational(cd) != c) {
      t = Interval{bigfloat::to_double(c, false), bigfloat::to_double(c, true)};
    }
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = t * pow_i(b.iv.at(i), m[i]);
    acc = acc + t;
  }
  return acc;
}

Interval interval_eval(const Expr& e, const Box& b) {
  switch (e.kind) {
    case Expr::Kind::Poly:
      return interval_eval(e.poly, b);
    case Expr::Kind::Pi: {
      auto [lo, hi] = bigfloat::pi_multiple(e.pi_mult);
      return {lo, hi};
    }
    case Expr::Kind::Sin:
      return sin_iv(b.iv.at(e.trig_var));
    case Expr::Kind::Cos:
      return cos_iv(b.iv.at(e.trig_var));
    case Expr::Kind::Neg:
      return -interval_eval(*e.kids[0], b);
    case Expr::Kind::Sum: {
      Interval acc{0, 0};
      for (const auto& k : e.kids) acc = acc + interval_eval(*k, b);
      return acc;
    }
    case Expr::Kind::Prod: {
      Interval acc{1, 1};
      for (const auto& k : e.kids) acc = acc * interval_eval(*k, b);
      return acc;
    }
    case Expr::Kind::Quot:
      return interval_eval(*e.kids[0], b) / interval_eval(*e.kids[1], b);
  }
  throw std::logic_error("unreachable");
}

}  // namespace hykeep
