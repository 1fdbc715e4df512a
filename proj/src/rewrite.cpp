/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/rewrite.hpp"

#include <algorithm>

namespace hykeep {

RewriteSystem::RewriteSystem(const std::vector<Polynomial>& equalities) {
  for (const auto& p : equalities) add_equality(p);
}

void RewriteSystem::add_equality(const Polynomial& p) {
  if (p.is_zero() || p.is_constant()) return;
  const auto& terms = p.terms();

  // split off the constant term
  Rational c0(0);
  std::vector<std::pair<Monomial, Rational>> rest;
  for (const auto& [m, c] : terms) {
    if (total_degree(m) == 0)
      c0 = c;
    else
      rest.emplace_back(m, c);
  }

  // monomial = constant:  c1*m + c0 = 0
  if (rest.size() == 1) {
    mono_rules_.push_back({rest[0].first, -c0 / rest[0].second});
    // single variable to a power of 1 is also a linear substitution
    const Monomial& m = rest[0].first;
    int var = -1, nvars = 0;
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) {
        ++nvars;
        var = static_cast<int>(i);
      }
    if (nvars == 1 && m[var] == 1)
      linear_rules_.push_back(
          {var, Polynomial::constant(p.vars(), -c0 / rest[0].second)});
    if (nvars == 1 && m[var] == 2)
      square_rules_.push_back(
          {var, Polynomial::constant(p.vars(), -c0 / rest[0].second)});
    return;
  }

  // linear in all terms: solve for the last variable present
  bool all_linear = std::all_of(rest.begin(), rest.end(), [](const auto& t) {
    return total_degree(t.first) == 1;
  });
  if (all_linear) {
    // pick the variable with the highest index (latest in the order)
    int best = -1;
    Rational coeff;
    for (const auto& [m, c] : rest) {
      for (size_t i = 0; i < m.size(); ++i)
        if (m[i] == 1 && static_cast<int>(i) > best) {
          best = static_cast<int>(i);
          coeff = c;
        }
    }
    Polynomial to(p.vars());
    to = to - Polynomial::constant(p.vars(), c0);
    for (const auto& [m, c] : rest) {
      bool is_best = m[best] == 1;
      if (!is_best) to = to - Polynomial::monomial(p.vars(), m, c);
    }
    linear_rules_.push_back({best, to * (Rational(1) / coeff)});
    return;
  }

  // circle: a*x^2 + a*y^2 + c0 = 0 -> y^2 = -c0/a - x^2 (y the later variable)
  if (rest.size() == 2) {
    auto is_square = [](const Monomial& m, int& var) {
      int v = -1;
      for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (m[i] != 2 || v >= 0) return false;
        v = static_cast<int>(i);
      }
      var = v;
      return v >= 0;
    };
    int vx = -1, vy = -1;
    if (is_square(rest[0].first, vx) && is_square(rest[1].first, vy) &&
        rest[0].second == rest[1].second) {
      if (vx > vy) std::swap(vx, vy);
      Polynomial x = Polynomial::variable(p.vars(), vx);
      Polynomial to = Polynomial::constant(p.vars(), -c0 / rest[0].second) - x * x;
      square_rules_.push_back({vy, to});
      return;
    }
  }
}

Polynomial RewriteSystem::reduce(const Polynomial& p) const {
  Polynomial cur = p;
  for (int round = 0; round < 64; ++round) {
    bool changed = false;

    for (const auto& r : linear_rules_) {
      if (!cur.mentions(r.var)) continue;
      Polynomial next(cur.vars());
      for (const auto& [m, c] : cur.terms()) {
        unsigned k = m.at(r.var);
        Monomial base = m;
        base[r.var] = 0;
        Polynomial t = Polynomial::monomial(cur.vars(), base, c);
        if (k > 0) t = t * r.to.pow(k);
        next = next + t;
      }
      cur = next;
      changed = true;
    }

    for (const auto& r : square_rules_) {
      bool hit = false;
      for (const auto& [m, c] : cur.terms())
        if (m.at(r.var) >= 2) hit = true;
      if (!hit) continue;
      Polynomial next(cur.vars());
      for (const auto& [m, c] : cur.terms()) {
        unsigned k = m.at(r.var);
        Monomial base = m;
        base[r.var] = k % 2;
        Polynomial t = Polynomial::monomial(cur.vars(), base, c);
        if (k >= 2) t = t * r.to.pow(k / 2);
        next = next + t;
      }
      cur = next;
      changed = true;
    }

    for (const auto& r : mono_rules_) {
      bool hit = false;
      for (const auto& [m, c] : cur.terms()) {
        bool div = true;
        for (size_t i = 0; i < m.size(); ++i)
          if (m[i] < r.m[i]) div = false;
        if (div) {
          hit = true;
          break;
        }
      }
      if (!hit) continue;
      Polynomial next(cur.vars());
      for (const auto& [m, c] : cur.terms()) {
        Monomial cm = m;
        Rational cc = c;
        for (;;) {
          bool div = true;
          for (size_t i = 0; i < cm.size(); ++i)
            if (cm[i] < r.m[i]) div = false;
          if (!div) break;
          for (size_t i = 0; i < cm.size(); ++i) cm[i] -= r.m[i];
          cc *= r.c;
        }
        next.add_term(cm, cc);
      }
      cur = next;
      changed = true;
    }

    if (!changed) break;
  }
  return cur;
}

}  // namespace hykeep
