/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hykeep {

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

VarsPtr VarOrder::station_keeping(bool with_alpha) {
  static const VarsPtr base =
      std::make_shared<VarOrder>(std::vector<std::string>{"g", "h", "e", "d", "phi"});
  static const VarsPtr ext = std::make_shared<VarOrder>(
      std::vector<std::string>{"g", "h", "e", "d", "phi", "alpha"});
  return with_alpha ? ext : base;
}

int VarOrder::index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int VarOrder::require(const std::string& name) const {
  int i = index(name);
  if (i < 0) throw UnknownVariableError("unknown variable: " + name);
  return i;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  // lex on the exponent vector: earlier variable with higher power wins
  return a > b;
}

Polynomial::Polynomial(VarsPtr vars, const Rational& c) : vars_(std::move(vars)) {
  if (!is_zero(c)) terms_.emplace(Monomial(vars_->size(), 0), c);
}

Polynomial Polynomial::variable(VarsPtr vars, int index) {
  Polynomial p(vars);
  Monomial m(vars->size(), 0);
  m.at(index) = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

Polynomial Polynomial::variable(VarsPtr vars, const std::string& name) {
  int i = vars->require(name);
  return variable(vars, i);
}

Polynomial Polynomial::constant(VarsPtr vars, const Rational& c) {
  return Polynomial(std::move(vars), c);
}

Polynomial Polynomial::monomial(VarsPtr vars, Monomial m, const Rational& c) {
  Polynomial p(vars);
  if (static_cast<int>(m.size()) != vars->size())
    throw std::invalid_argument("monomial arity mismatch");
  if (!is_zero(c)) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("constant_value on non-constant");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.begin()->first));
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.at(var)));
  return d;
}

bool Polynomial::mentions(int var) const {
  for (const auto& [m, c] : terms_)
    if (m.at(var) > 0) return true;
  return false;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (vars_ == o.vars_) return;
  if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
  throw std::invalid_argument("polynomials over different variable orders");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (hykeep::is_zero(it->second)) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r = *this;
  if (!r.vars_) r.vars_ = o.vars_;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial r(vars_ ? vars_ : o.vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(vars_);
  if (is_zero(c)) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (vars_ && o.vars_ && !(*vars_ == *o.vars_)) return false;
  return terms_ == o.terms_;
}

bool Polynomial::deterministic_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  GrlexGreater gt;
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (gt(ia->first, ib->first)) return true;   // larger leading monomial first
    if (gt(ib->first, ia->first)) return false;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == 0) continue;
    Monomial dm = m;
    dm[var] -= 1;
    r.add_term(dm, c * Rational(static_cast<long>(m[var])));
  }
  return r;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& point) const {
  Rational acc(0);
  std::vector<std::optional<Rational>> bound(vars_ ? vars_->size() : 0);
  for (const auto& [name, val] : point) {
    int i = vars_ ? vars_->index(name) : -1;
    if (i >= 0) bound[i] = val;
  }
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < m.size(); ++i) {
      for (unsigned k = 0; k < m[i]; ++k) {
        if (!bound[i])
          throw UnboundSymbolError("unbound symbol: " + vars_->name(static_cast<int>(i)));
        t *= *bound[i];
      }
    }
    acc += t;
  }
  return acc;
}

double Polynomial::evaluate(const double* state) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (size_t i = 0; i < m.size(); ++i) {
      double x = state[i];
      for (unsigned k = 0; k < m[i]; ++k) t *= x;
    }
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Rational lc = leading_coefficient();
  return *this * (Rational(1) / lc);
}

Polynomial Polynomial::primitive_integer() const {
  if (terms_.empty()) return *this;
  Integer num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Polynomial r = *this * scale;
  if (sgn(r.leading_coefficient()) < 0) r = r * Rational(-1);
  return r;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
      if (sgn(a) < 0) a = -a;
    }
    first = false;
    bool need_star = false;
    if (a != 1 || total_degree(m) == 0) {
      out << a.get_str();
      need_star = true;
    }
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      need_star = true;
      out << vars_->name(static_cast<int>(i));
      if (m[i] > 1) out << "^" << m[i];
    }
  }
  return out.str();
}

void VectorField::assign(const std::string& name, Polynomial p) {
  rhs.at(vars->require(name)) = std::move(p);
}

const Polynomial& VectorField::rhs_of(int var) const {
  if (var < 0 || var >= static_cast<int>(rhs.size()) || !rhs[var])
    throw UnknownVariableError("no derivative assigned for variable index " +
                               std::to_string(var));
  return *rhs[var];
}

bool VectorField::closed_on(const std::vector<int>& subset) const {
  std::vector<bool> in(vars->size(), false);
  for (int v : subset) in.at(v) = true;
  for (int v : subset) {
    if (!assigned(v)) return false;
    const Polynomial& p = *rhs[v];
    for (int i = 0; i < vars->size(); ++i)
      if (!in[i] && p.mentions(i)) return false;
  }
  return true;
}

Polynomial lie_derivative(const Polynomial& p, const VectorField& f) {
  Polynomial acc(p.vars() ? p.vars() : f.vars);
  for (int i = 0; i < f.vars->size(); ++i) {
    if (!p.mentions(i)) continue;
    if (!f.assigned(i))
      throw UnknownVariableError("lie derivative: no rhs for " + f.vars->name(i));
    acc = acc + p.derivative(i) * (*f.rhs[i]);
  }
  return acc;
}

std::optional<Polynomial> try_divide(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw ZeroDivisorError("division by the zero polynomial");
  Polynomial q(num.vars() ? num.vars() : den.vars());
  Polynomial r = num;
  const Monomial& dlm = den.leading_monomial();
  const Rational& dlc = den.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& rlm = r.leading_monomial();
    Monomial t(rlm.size());
    for (size_t i = 0; i < rlm.size(); ++i) {
      if (rlm[i] < dlm[i]) return std::nullopt;
      t[i] = rlm[i] - dlm[i];
    }
    Rational tc = r.leading_coefficient() / dlc;
    Polynomial term = Polynomial::monomial(r.vars(), t, tc);
    q = q + term;
    r = r - term * den;
  }
  return q;
}

}  // namespace hykeep
