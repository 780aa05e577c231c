#pragma once

#include <string>
#include <string_view>

#include "leibniz/poly.hpp"
#include "leibniz/rational_fn.hpp"

namespace leibniz {

// Expression grammar (whitespace insensitive):
//
//   expr   := term (("+" | "-") term)*
//   term   := unary (("*" | "/") unary)*
//   unary  := "-" unary | factor
//   factor := atom ("^" uint)?
//   atom   := uint | var | "(" expr ")"
//   var    := k1 | k2 | k3 | l1 | l2 | l3 | p1 | p2 | p3 | alpha | s
//
// "ℓ1".."ℓ3" and "α" are accepted as aliases. A rational literal "a/b" is a
// division of two integers. Dividing by a non-constant yields a rational
// function.

/// Throws ParseError on malformed input or an unknown variable name.
RationalFn parse_expr(std::string_view text);

/// As parse_expr, but the result must be a polynomial.
Poly parse_poly(std::string_view text);

/// Canonical rendering: terms in descending monomial order, e.g.
/// "k1^2 - 2*k1*l2 + l2^2". parse_poly(to_string(p)) == p.
std::string to_string(const Poly& p, bool unicode = false);

/// "num" or "(num)/(den)"; parse_expr(to_string(f)) == f for normalized f.
std::string to_string(const RationalFn& f, bool unicode = false);

}  // namespace leibniz
