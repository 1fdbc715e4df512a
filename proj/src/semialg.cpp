/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hykeep/semialg.hpp"

#include <cmath>
#include <sstream>

namespace hykeep {

std::string Atom::str() const {
  const char* op = rel == Rel::LT ? " < 0" : rel == Rel::LE ? " <= 0" : " = 0";
  return expr->str() + op;
}

bool Atom::holds(const double* state, double eq_tol) const {
  double v = expr->evaluate(state);
  switch (rel) {
    case Rel::LT:
      return v < 0;
    case Rel::LE:
      return v <= 0;
    case Rel::EQ:
      return std::fabs(v) <= eq_tol;
  }
  return false;
}

Atom atom_lt(ExprPtr e) { return Atom{std::move(e), Rel::LT}; }
Atom atom_le(ExprPtr e) { return Atom{std::move(e), Rel::LE}; }
Atom atom_eq(ExprPtr e) { return Atom{std::move(e), Rel::EQ}; }
Atom atom_gt(ExprPtr e) { return Atom{Expr::neg(std::move(e)), Rel::LT}; }
Atom atom_ge(ExprPtr e) { return Atom{Expr::neg(std::move(e)), Rel::LE}; }

SemialgSet SemialgSet::top() { return SemialgSet(); }

SemialgSet SemialgSet::bottom() {
  SemialgSet s;
  s.kind_ = Kind::False;
  return s;
}

SemialgSet SemialgSet::atom(Atom a) {
  SemialgSet s;
  s.kind_ = Kind::Atom;
  s.atom_ = std::move(a);
  return s;
}

SemialgSet SemialgSet::conj(std::vector<SemialgSet> kids) {
  SemialgSet s;
  s.kind_ = Kind::And;
  for (auto& k : kids) {
    if (k.is_false()) return bottom();
    if (k.is_true()) continue;
    if (k.kind_ == Kind::And)
      for (auto& kk : k.kids_) s.kids_.push_back(std::move(kk));
    else
      s.kids_.push_back(std::move(k));
  }
  if (s.kids_.empty()) return top();
  if (s.kids_.size() == 1) return s.kids_[0];
  return s;
}

SemialgSet SemialgSet::disj(std::vector<SemialgSet> kids) {
  SemialgSet s;
  s.kind_ = Kind::Or;
  for (auto& k : kids) {
    if (k.is_true()) return top();
    if (k.is_false()) continue;
    if (k.kind_ == Kind::Or)
      for (auto& kk : k.kids_) s.kids_.push_back(std::move(kk));
    else
      s.kids_.push_back(std::move(k));
  }
  if (s.kids_.empty()) return bottom();
  if (s.kids_.size() == 1) return s.kids_[0];
  return s;
}

SemialgSet SemialgSet::operator&&(const SemialgSet& o) const {
  return conj({*this, o});
}

SemialgSet SemialgSet::operator||(const SemialgSet& o) const {
  return disj({*this, o});
}

SemialgSet SemialgSet::negate() const {
  switch (kind_) {
    case Kind::True:
      return bottom();
    case Kind::False:
      return top();
    case Kind::Atom: {
      switch (atom_.rel) {
        case Rel::LT:  // !(e < 0)  ==  -e <= 0
          return atom(Atom{Expr::neg(atom_.expr), Rel::LE});
        case Rel::LE:  // !(e <= 0) ==  -e < 0
          return atom(Atom{Expr::neg(atom_.expr), Rel::LT});
        case Rel::EQ:  // !(e = 0)  ==  e < 0 | -e < 0
          return disj({atom(Atom{atom_.expr, Rel::LT}),
                       atom(Atom{Expr::neg(atom_.expr), Rel::LT})});
      }
      return bottom();
    }
    case Kind::And: {
      std::vector<SemialgSet> n;
      n.reserve(kids_.size());
      for (const auto& k : kids_) n.push_back(k.negate());
      return disj(std::move(n));
    }
    case Kind::Or: {
      std::vector<SemialgSet> n;
      n.reserve(kids_.size());
      for (const auto& k : kids_) n.push_back(k.negate());
      return conj(std::move(n));
    }
  }
  return bottom();
}

std::vector<std::vector<Atom>> SemialgSet::dnf(size_t max_branches) const {
  switch (kind_) {
    case Kind::True:
      return {{}};
    case Kind::False:
      return {};
    case Kind::Atom:
      return {{atom_}};
    case Kind::Or: {
      std::vector<std::vector<Atom>> out;
      for (const auto& k : kids_) {
        auto sub = k.dnf(max_branches);
        for (auto& b : sub) {
          out.push_back(std::move(b));
          if (out.size() > max_branches)
            throw std::runtime_error("DNF expansion too large");
        }
      }
      return out;
    }
    case Kind::And: {
      std::vector<std::vector<Atom>> out = {{}};
      for (const auto& k : kids_) {
        auto sub = k.dnf(max_branches);
        std::vector<std::vector<Atom>> next;
        for (const auto& a : out) {
          for (const auto& b : sub) {
            auto merged = a;
            merged.insert(merged.end(), b.begin(), b.end());
            next.push_back(std::move(merged));
            if (next.size() > max_branches)
              throw std::runtime_error("DNF expansion too large");
          }
        }
        out = std::move(next);
      }
      return out;
    }
  }
  return {};
}

std::vector<Atom> SemialgSet::atoms() const {
  std::vector<Atom> out;
  switch (kind_) {
    case Kind::Atom:
      out.push_back(atom_);
      break;
    case Kind::And:
    case Kind::Or:
      for (const auto& k : kids_) {
        auto sub = k.atoms();
        out.insert(out.end(), sub.begin(), sub.end());
      }
      break;
    default:
      break;
  }
  return out;
}

bool SemialgSet::holds(const double* state, double eq_tol) const {
  switch (kind_) {
    case Kind::True:
      return true;
    case Kind::False:
      return false;
    case Kind::Atom:
      return atom_.holds(state, eq_tol);
    case Kind::And:
      for (const auto& k : kids_)
        if (!k.holds(state, eq_tol)) return false;
      return true;
    case Kind::Or:
      for (const auto& k : kids_)
        if (k.holds(state, eq_tol)) return true;
      return false;
  }
  return false;
}

std::string SemialgSet::str() const {
  switch (kind_) {
    case Kind::True:
      return "true";
    case Kind::False:
      return "false";
    case Kind::Atom:
      return atom_.str();
    case Kind::And:
    case Kind::Or: {
      std::ostringstream out;
      const char* op = kind_ == Kind::And ? " & " : " | ";
      out << "(";
      for (size_t i = 0; i < kids_.size(); ++i) {
        if (i) out << op;
        out << kids_[i].str();
      }
      out << ")";
      return out.str();
    }
  }
  return "?";
}

}  // namespace hykeep
