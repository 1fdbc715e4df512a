/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "hykeep/expr.hpp"

namespace hykeep {

/// Sign relation of an atom `expr rel 0`.
enum class Rel { LT, LE, EQ };

struct Atom {
  ExprPtr expr;
  Rel rel;

  bool strict() const { return rel == Rel::LT; }
  std::string str() const;
  /// Pointwise check with an absolute tolerance on equality atoms.
  bool holds(const double* state, double eq_tol) const;
};

Atom atom_lt(ExprPtr e);   // e < 0
Atom atom_le(ExprPtr e);   // e <= 0
Atom atom_eq(ExprPtr e);   // e = 0
Atom atom_gt(ExprPtr e);   // e > 0  (stored as -e < 0)
Atom atom_ge(ExprPtr e);   // e >= 0 (stored as -e <= 0)

/// Boolean combination of sign atoms. Negation is pushed to the atoms at
/// construction time, so the tree only ever holds And/Or/Atom/True/False.
class SemialgSet {
 public:
  enum class Kind { True, False, Atom, And, Or };

  static SemialgSet top();
  static SemialgSet bottom();
  static SemialgSet atom(Atom a);
  static SemialgSet conj(std::vector<SemialgSet> kids);
  static SemialgSet disj(std::vector<SemialgSet> kids);

  SemialgSet operator&&(const SemialgSet& o) const;
  SemialgSet operator||(const SemialgSet& o) const;
  SemialgSet negate() const;

  Kind kind() const { return kind_; }
  const Atom& as_atom() const { return atom_; }
  const std::vector<SemialgSet>& kids() const { return kids_; }

  bool is_true() const { return kind_ == Kind::True; }
  bool is_false() const { return kind_ == Kind::False; }

  /// Conjunction branches of the disjunctive normal form. Throws if the
  /// expansion would exceed `max_branches`.
  std::vector<std::vector<Atom>> dnf(size_t max_branches = 4096) const;

  /// All atoms appearing anywhere in the tree.
  std::vector<Atom> atoms() const;

  bool holds(const double* state, double eq_tol = 0) const;

  std::string str() const;

 private:
  Kind kind_ = Kind::True;
  Atom atom_{nullptr, Rel::LE};
  std::vector<SemialgSet> kids_;
};

}  // namespace hykeep
