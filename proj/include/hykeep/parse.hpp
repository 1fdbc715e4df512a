/*
 * Copyright (c) 2026 The hykeep authors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>

#include "hykeep/semialg.hpp"

namespace hykeep {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Infix expression grammar: identifiers, integer/decimal/ratio literals,
/// `pi`, `sin(x)`, `cos(x)`, `+ - * / ^` and parentheses.
ExprPtr parse_expr(const std::string& text, const VarsPtr& vars);

/// parse_expr + conversion; fails if the expression is not a polynomial.
Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars);

/// Boolean set grammar over comparisons: `a <= b`, `<`, `>`, `>=`, `=`,
/// `!=` combined with `&`, `|`, `!` and parentheses.
SemialgSet parse_set(const std::string& text, const VarsPtr& vars);

}  // namespace hykeep
