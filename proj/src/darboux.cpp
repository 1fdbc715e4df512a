/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/darboux.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <map>
#include <set>

namespace hykeep {

namespace {

using MatrixR = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorR = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Monomials over the subset with total degree in [mindeg, maxdeg],
/// grlex-descending.
std::vector<Monomial> subset_monomials(const VarsPtr& vars,
                                       const std::vector<int>& subset, int mindeg,
                                       int maxdeg) {
  std::vector<Monomial> out;
  Monomial cur(vars->size(), 0);
  // enumerate exponent tuples over subset positions with bounded total degree
  std::function<void(size_t, int)> rec = [&](size_t i, int remaining) {
    if (i == subset.size()) {
      if (static_cast<int>(total_degree(cur)) >= mindeg) out.push_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[subset[i]] = static_cast<unsigned>(e);
      rec(i + 1, remaining - e);
    }
    cur[subset[i]] = 0;
  };
  rec(0, maxdeg);
  std::sort(out.begin(), out.end(), GrlexGreater());
  return out;
}

/// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(MatrixR& a) {
  std::vector<int> pivots;
  int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    Rational inv = Rational(1) / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      Rational f = a(i, c);
      for (int j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of the right nullspace of a (columns = unknowns).
std::vector<VectorR> nullspace(MatrixR a) {
  int cols = static_cast<int>(a.cols());
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<VectorR> basis;
  for (int j = 0; j < cols; ++j) {
    if (is_pivot[j]) continue;
    VectorR v = VectorR::Constant(cols, Rational(0));
    v(j) = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -a(static_cast<int>(r), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string poly_key(const Polynomial& p) { return p.str(); }

}  // namespace

std::vector<Polynomial> enumerate_cofactors(int maxdeg,
                                            const std::vector<Rational>& coefficients,
                                            int max_terms, const VarsPtr& vars,
                                            const std::vector<int>& vars_subset,
                                            size_t cap) {
  if (maxdeg < 0 || max_terms < 1) throw std::invalid_argument("bad enumeration bounds");

  std::vector<Rational> coeffs;
  for (const auto& c : coefficients)
    if (!is_zero(c)) coeffs.push_back(c);
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());

  std::vector<Monomial> monos = subset_monomials(vars, vars_subset, 1, maxdeg);

  // total count check before materializing
  size_t n = monos.size();
  size_t total = 1;  // zero polynomial
  size_t choose = 1;
  for (int k = 1; k <= max_terms && static_cast<size_t>(k) <= n; ++k) {
    choose = choose * (n - k + 1) / k;
    size_t combos = choose;
    for (int i = 0; i < k; ++i) {
      combos *= coeffs.size();
      if (combos > cap) throw BudgetExceededError("cofactor enumeration exceeds cap");
    }
    total += combos;
    if (total > cap) throw BudgetExceededError("cofactor enumeration exceeds cap");
  }

  std::vector<Polynomial> out;
  out.push_back(Polynomial(vars));  // zero

  std::vector<int> idx;
  std::vector<size_t> cidx;
  std::function<void(size_t, int)> rec = [&](size_t start, int k) {
    if (k == 0) {
      // assign coefficients to the chosen monomials
      cidx.assign(idx.size(), 0);
      for (;;) {
        Polynomial p(vars);
        for (size_t i = 0; i < idx.size(); ++i)
          p.add_term(monos[idx[i]], coeffs[cidx[i]]);
        out.push_back(std::move(p));
        size_t i = 0;
        for (; i < cidx.size(); ++i) {
          if (++cidx[i] < coeffs.size()) break;
          cidx[i] = 0;
        }
        if (i == cidx.size()) break;
      }
      return;
    }
    for (size_t m = start; m + k <= monos.size() + 1 && m < monos.size(); ++m) {
      idx.push_back(static_cast<int>(m));
      rec(m + 1, k - 1);
      idx.pop_back();
    }
  };
  for (int k = 1; k <= max_terms; ++k) rec(0, k);
  return out;
}

std::vector<DarbouxPair> darboux_search(const VectorField& f, int pdeg, int cofdeg,
                                        const std::vector<int>& vars_subset,
                                        const SearchOptions& opt) {
  if (!f.closed_on(vars_subset))
    throw std::invalid_argument(
        "darboux_search: the variable subset is not closed under the field");
  const VarsPtr& vars = f.vars;

  std::vector<Polynomial> cofactors = enumerate_cofactors(
      cofdeg, opt.coefficients, opt.max_terms, vars, vars_subset, opt.enumeration_cap);

  std::vector<Monomial> templ = subset_monomials(vars, vars_subset, 0, pdeg);
  std::vector<Polynomial> lie_of;  // lie derivative per template monomial
  lie_of.reserve(templ.size());
  for (const auto& m : templ)
    lie_of.push_back(lie_derivative(Polynomial::monomial(vars, m, Rational(1)), f));

  std::map<std::string, DarbouxPair> found;

  for (const auto& c : cofactors) {
    // residual lie(m) - c*m per template monomial, over a shared row space
    std::vector<Polynomial> residual;
    residual.reserve(templ.size());
    std::map<Monomial, int, GrlexGreater> row_of;
    for (size_t j = 0; j < templ.size(); ++j) {
      Polynomial r =
          lie_of[j] - c * Polynomial::monomial(vars, templ[j], Rational(1));
      for (const auto& [m, coef] : r.terms())
        row_of.emplace(m, 0);
      residual.push_back(std::move(r));
    }
    int nrows = 0;
    for (auto& [m, id] : row_of) id = nrows++;
    if (nrows == 0) nrows = 1;

    MatrixR a = MatrixR::Constant(nrows, static_cast<int>(templ.size()), Rational(0));
    for (size_t j = 0; j < templ.size(); ++j)
      for (const auto& [m, coef] : residual[j].terms())
        a(row_of[m], static_cast<int>(j)) = coef;

    for (const auto& v : nullspace(std::move(a))) {
      Polynomial p(vars);
      for (size_t j = 0; j < templ.size(); ++j)
        if (!is_zero(v(static_cast<int>(j))))
          p.add_term(templ[j], v(static_cast<int>(j)));
      if (p.is_constant()) continue;
      p = p.monic();
      found.emplace(poly_key(p), DarbouxPair{p, c});
    }
  }

  // suppress products of two found polynomials (cofactors add)
  std::vector<DarbouxPair> pairs;
  pairs.reserve(found.size());
  for (auto& [k, pr] : found) pairs.push_back(pr);
  std::sort(pairs.begin(), pairs.end(), [](const DarbouxPair& a, const DarbouxPair& b) {
    return Polynomial::deterministic_less(a.p, b.p);
  });

  std::set<std::string> keys;
  for (const auto& pr : pairs) keys.insert(poly_key(pr.p));
  std::vector<DarbouxPair> out;
  for (const auto& pr : pairs) {
    bool reducible = false;
    for (const auto& q : pairs) {
      if (q.p.degree() < 1 || q.p.degree() >= pr.p.degree()) continue;
      auto quo = try_divide(pr.p, q.p);
      if (!quo || quo->is_constant()) continue;
      if (keys.count(poly_key(quo->monic()))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(pr);
  }
  return out;
}

bool darboux_verify(const DarbouxPair& pair, const VectorField& f) {
  return (lie_derivative(pair.p, f) - pair.cofactor * pair.p).is_zero();
}

std::vector<FirstIntegral> first_integrals(const std::vector<DarbouxPair>& pairs) {
  std::vector<FirstIntegral> out;
  if (pairs.empty()) return out;
  const VarsPtr& vars = pairs[0].p.vars();

  // rows = cofactor monomials, columns = pairs
  std::map<Monomial, int, GrlexGreater> row_of;
  for (const auto& pr : pairs)
    for (const auto& [m, c] : pr.cofactor.terms()) row_of.emplace(m, 0);
  int nrows = 0;
  for (auto& [m, id] : row_of) id = nrows++;
  if (nrows == 0) nrows = 1;

  MatrixR a = MatrixR::Constant(nrows, static_cast<int>(pairs.size()), Rational(0));
  for (size_t j = 0; j < pairs.size(); ++j)
    for (const auto& [m, c] : pairs[j].cofactor.terms())
      a(row_of[m], static_cast<int>(j)) = c;

  for (const auto& v : nullspace(std::move(a))) {
    // primitive integer vector
    Integer den_lcm(1);
    for (int i = 0; i < v.size(); ++i)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v(i).get_den().get_mpz_t());
    std::vector<Integer> ints(v.size());
    Integer g(0);
    for (int i = 0; i < v.size(); ++i) {
      Rational scaled = v(i) * Rational(den_lcm);
      ints[i] = scaled.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (sgn(g) != 0)
      for (auto& z : ints) z /= g;

    FirstIntegral fi;
    fi.numerator = Polynomial::constant(vars, Rational(1));
    fi.denominator = Polynomial::constant(vars, Rational(1));
    for (size_t j = 0; j < pairs.size(); ++j) {
      long lam = static_cast<long>(ints[j].get_si());
      fi.exponents.push_back(lam);
      if (lam == 0) continue;
      fi.sources.push_back(pairs[j]);
      if (lam > 0)
        fi.numerator = fi.numerator * pairs[j].p.pow(static_cast<unsigned>(lam));
      else
        fi.denominator = fi.denominator * pairs[j].p.pow(static_cast<unsigned>(-lam));
    }
    if (fi.sources.empty()) continue;

    // discard identically constant combinations
    if (fi.denominator.is_constant()) {
      Polynomial scaled = fi.numerator * (Rational(1) / fi.denominator.constant_value());
      if (scaled.is_constant()) continue;
    } else {
      auto q = try_divide(fi.numerator, fi.denominator);
      if (q && q->is_constant()) continue;
    }

    fi.expr = Expr::quot(Expr::make_poly(fi.numerator), Expr::make_poly(fi.denominator));
    out.push_back(std::move(fi));
  }
  return out;
}

}  // namespace hykeep
