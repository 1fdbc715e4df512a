/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/bigfloat.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace hykeep::bigfloat {

namespace {

// Small RAII interval over mpfr with outward rounding.
class MpfrIv {
 public:
  explicit MpfrIv(long prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
  }
  ~MpfrIv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  MpfrIv(const MpfrIv&) = delete;
  MpfrIv& operator=(const MpfrIv&) = delete;
  MpfrIv(MpfrIv&&) = delete;

  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  void set_q(const Rational& q) {
    mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
  }

 private:
  mpfr_t lo_, hi_;
};

void iv_add(MpfrIv& r, const MpfrIv& a, const MpfrIv& b) {
  mpfr_add(r.lo(), a.lo(), b.lo(), MPFR_RNDD);
  mpfr_add(r.hi(), a.hi(), b.hi(), MPFR_RNDU);
}

void iv_neg(MpfrIv& r, const MpfrIv& a) {
  mpfr_t t;
  mpfr_init2(t, mpfr_get_prec(r.lo()));
  mpfr_neg(t, a.hi(), MPFR_RNDD);
  mpfr_neg(r.hi(), a.lo(), MPFR_RNDU);
  mpfr_set(r.lo(), t, MPFR_RNDD);
  mpfr_clear(t);
}

void iv_mul(MpfrIv& r, const MpfrIv& a, const MpfrIv& b, long prec) {
  mpfr_t c[4], best_lo, best_hi;
  for (auto& x : c) mpfr_init2(x, prec);
  mpfr_init2(best_lo, prec);
  mpfr_init2(best_hi, prec);
  mpfr_mul(c[0], a.lo(), b.lo(), MPFR_RNDD);
  mpfr_mul(c[1], a.lo(), b.hi(), MPFR_RNDD);
  mpfr_mul(c[2], a.hi(), b.lo(), MPFR_RNDD);
  mpfr_mul(c[3], a.hi(), b.hi(), MPFR_RNDD);
  mpfr_set(best_lo, c[0], MPFR_RNDD);
  for (int i = 1; i < 4; ++i)
    if (mpfr_cmp(c[i], best_lo) < 0) mpfr_set(best_lo, c[i], MPFR_RNDD);
  mpfr_mul(c[0], a.lo(), b.lo(), MPFR_RNDU);
  mpfr_mul(c[1], a.lo(), b.hi(), MPFR_RNDU);
  mpfr_mul(c[2], a.hi(), b.lo(), MPFR_RNDU);
  mpfr_mul(c[3], a.hi(), b.hi(), MPFR_RNDU);
  mpfr_set(best_hi, c[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i)
    if (mpfr_cmp(c[i], best_hi) > 0) mpfr_set(best_hi, c[i], MPFR_RNDU);
  mpfr_set(r.lo(), best_lo, MPFR_RNDD);
  mpfr_set(r.hi(), best_hi, MPFR_RNDU);
  for (auto& x : c) mpfr_clear(x);
  mpfr_clear(best_lo);
  mpfr_clear(best_hi);
}

bool iv_contains_zero(const MpfrIv& a) {
  return mpfr_sgn(a.lo()) <= 0 && mpfr_sgn(a.hi()) >= 0;
}

void iv_inv(MpfrIv& r, const MpfrIv& a, long prec) {
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_ui_div(t, 1, a.hi(), MPFR_RNDD);
  mpfr_ui_div(r.hi(), 1, a.lo(), MPFR_RNDU);
  mpfr_set(r.lo(), t, MPFR_RNDD);
  mpfr_clear(t);
}

// Enclose sin/cos of the degenerate point interval [a.lo, a.hi].
// The interval is tiny (a point value), so evaluating both endpoints with
// both roundings and taking the hull is a valid enclosure as long as no
// extremum lies inside; for safety widen by one ulp.
void iv_trig(MpfrIv& r, const MpfrIv& a, bool is_sin, long prec) {
  mpfr_t v[4];
  for (auto& x : v) mpfr_init2(x, prec);
  if (is_sin) {
    mpfr_sin(v[0], a.lo(), MPFR_RNDD);
    mpfr_sin(v[1], a.lo(), MPFR_RNDU);
    mpfr_sin(v[2], a.hi(), MPFR_RNDD);
    mpfr_sin(v[3], a.hi(), MPFR_RNDU);
  } else {
    mpfr_cos(v[0], a.lo(), MPFR_RNDD);
    mpfr_cos(v[1], a.lo(), MPFR_RNDU);
    mpfr_cos(v[2], a.hi(), MPFR_RNDD);
    mpfr_cos(v[3], a.hi(), MPFR_RNDU);
  }
  mpfr_set(r.lo(), v[0], MPFR_RNDD);
  mpfr_set(r.hi(), v[0], MPFR_RNDU);
  for (int i = 1; i < 4; ++i) {
    if (mpfr_cmp(v[i], r.lo()) < 0) mpfr_set(r.lo(), v[i], MPFR_RNDD);
    if (mpfr_cmp(v[i], r.hi()) > 0) mpfr_set(r.hi(), v[i], MPFR_RNDU);
  }
  mpfr_nextbelow(r.lo());
  mpfr_nextabove(r.hi());
  // derivative of sin/cos is bounded by 1, so widening by the input width
  // covers any interior extremum of the (tiny) input interval
  mpfr_t w;
  mpfr_init2(w, prec);
  mpfr_sub(w, a.hi(), a.lo(), MPFR_RNDU);
  mpfr_sub(r.lo(), r.lo(), w, MPFR_RNDD);
  mpfr_add(r.hi(), r.hi(), w, MPFR_RNDU);
  // clamp to [-1, 1]
  if (mpfr_cmp_si(r.lo(), -1) < 0) mpfr_set_si(r.lo(), -1, MPFR_RNDD);
  if (mpfr_cmp_si(r.hi(), 1) > 0) mpfr_set_si(r.hi(), 1, MPFR_RNDU);
  mpfr_clear(w);
  for (auto& x : v) mpfr_clear(x);
}

bool eval_rec(const Expr& e, const std::vector<Rational>& point, long prec, MpfrIv& out);

bool eval_poly(const Polynomial& p, const std::vector<Rational>& point, long prec,
               MpfrIv& out) {
  // exact rational evaluation, then directed conversion
  Rational acc(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point.at(i);
    acc += t;
  }
  out.set_q(acc);
  return true;
}

bool eval_rec(const Expr& e, const std::vector<Rational>& point, long prec, MpfrIv& out) {
  switch (e.kind) {
    case Expr::Kind::Poly:
      return eval_poly(e.poly, point, prec, out);
    case Expr::Kind::Pi: {
      MpfrIv q(prec);
      q.set_q(e.pi_mult);
      MpfrIv p(prec);
      mpfr_const_pi(p.lo(), MPFR_RNDD);
      mpfr_const_pi(p.hi(), MPFR_RNDU);
      iv_mul(out, q, p, prec);
      return true;
    }
    case Expr::Kind::Sin:
    case Expr::Kind::Cos: {
      MpfrIv x(prec);
      x.set_q(point.at(e.trig_var));
      iv_trig(out, x, e.kind == Expr::Kind::Sin, prec);
      return true;
    }
    case Expr::Kind::Neg: {
      MpfrIv k(prec);
      if (!eval_rec(*e.kids[0], point, prec, k)) return false;
      iv_neg(out, k);
      return true;
    }
    case Expr::Kind::Sum: {
      mpfr_set_zero(out.lo(), 1);
      mpfr_set_zero(out.hi(), 1);
      for (const auto& kid : e.kids) {
        MpfrIv k(prec), t(prec);
        if (!eval_rec(*kid, point, prec, k)) return false;
        iv_add(t, out, k);
        mpfr_set(out.lo(), t.lo(), MPFR_RNDD);
        mpfr_set(out.hi(), t.hi(), MPFR_RNDU);
      }
      return true;
    }
    case Expr::Kind::Prod: {
      mpfr_set_si(out.lo(), 1, MPFR_RNDD);
      mpfr_set_si(out.hi(), 1, MPFR_RNDU);
      for (const auto& kid : e.kids) {
        MpfrIv k(prec), t(prec);
        if (!eval_rec(*kid, point, prec, k)) return false;
        iv_mul(t, out, k, prec);
        mpfr_set(out.lo(), t.lo(), MPFR_RNDD);
        mpfr_set(out.hi(), t.hi(), MPFR_RNDU);
      }
      return true;
    }
    case Expr::Kind::Quot: {
      MpfrIv n(prec), d(prec), inv(prec);
      if (!eval_rec(*e.kids[0], point, prec, n)) return false;
      if (!eval_rec(*e.kids[1], point, prec, d)) return false;
      if (iv_contains_zero(d)) return false;
      iv_inv(inv, d, prec);
      iv_mul(out, n, inv, prec);
      return true;
    }
  }
  return false;
}

}  // namespace

double pi_lo() {
  static const double v = [] {
    mpfr_t p;
    mpfr_init2(p, 64);
    mpfr_const_pi(p, MPFR_RNDD);
    double d = mpfr_get_d(p, MPFR_RNDD);
    mpfr_clear(p);
    return d;
  }();
  return v;
}

double pi_hi() {
  static const double v = [] {
    mpfr_t p;
    mpfr_init2(p, 64);
    mpfr_const_pi(p, MPFR_RNDU);
    double d = mpfr_get_d(p, MPFR_RNDU);
    mpfr_clear(p);
    return d;
  }();
  return v;
}

std::pair<double, double> pi_multiple(const Rational& q) {
  mpfr_t p, t;
  mpfr_init2(p, 128);
  mpfr_init2(t, 128);
  mpfr_const_pi(p, MPFR_RNDD);
  mpfr_mul_q(t, p, q.get_mpq_t(), sgn(q) >= 0 ? MPFR_RNDD : MPFR_RNDU);
  double lo = mpfr_get_d(t, MPFR_RNDD);
  mpfr_const_pi(p, MPFR_RNDU);
  mpfr_mul_q(t, p, q.get_mpq_t(), sgn(q) >= 0 ? MPFR_RNDU : MPFR_RNDD);
  double hi = mpfr_get_d(t, MPFR_RNDU);
  mpfr_clear(p);
  mpfr_clear(t);
  if (sgn(q) < 0 && lo > hi) std::swap(lo, hi);
  return {lo, hi};
}

double to_double(const Rational& q, bool round_up) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, q.get_mpq_t(), round_up ? MPFR_RNDU : MPFR_RNDD);
  double d = mpfr_get_d(t, round_up ? MPFR_RNDU : MPFR_RNDD);
  mpfr_clear(t);
  return d;
}

std::pair<double, double> sqrt_enclosure(const Rational& r) {
  if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
  mpfr_t t, s;
  mpfr_init2(t, 128);
  mpfr_init2(s, 128);
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(s, t, MPFR_RNDD);
  double lo = mpfr_get_d(s, MPFR_RNDD);
  mpfr_set_q(t, r.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(s, t, MPFR_RNDU);
  double hi = mpfr_get_d(s, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(s);
  return {lo, hi};
}

int sign_pi_affine(const Rational& a, const Rational& b) {
  if (is_zero(b)) return sgn(a);
  for (long prec = 128; prec <= 2048; prec *= 2) {
    MpfrIv pi(prec), bb(prec), aa(prec), prod(prec), sum(prec);
    mpfr_const_pi(pi.lo(), MPFR_RNDD);
    mpfr_const_pi(pi.hi(), MPFR_RNDU);
    bb.set_q(b);
    aa.set_q(a);
    iv_mul(prod, bb, pi, prec);
    iv_add(sum, aa, prod);
    if (mpfr_sgn(sum.lo()) > 0) return 1;
    if (mpfr_sgn(sum.hi()) < 0) return -1;
  }
  throw std::runtime_error("sign of rational + rational*pi undecided at 2048 bits");
}

std::optional<std::pair<double, double>> eval_enclosure(
    const Expr& e, const std::vector<Rational>& point, long prec) {
  MpfrIv out(prec);
  if (!eval_rec(e, point, prec, out)) return std::nullopt;
  return std::make_pair(mpfr_get_d(out.lo(), MPFR_RNDD),
                        mpfr_get_d(out.hi(), MPFR_RNDU));
}

}  // namespace hykeep::bigfloat
