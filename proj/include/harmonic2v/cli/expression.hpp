#pragma once

#include <string>
#include <string_view>

#include "harmonic2v/polynomial.hpp"

namespace harmonic2v::cli {

/// Parses an expression such as "x1^2*u1 - 3/2*u2 + i*x3" in dimension m.
///
/// Grammar (whitespace ignored):
///   expr   := term (("+" | "-") term)*
///   term   := unary ("*" unary)*
///   unary  := ("+" | "-") unary | power
///   power  := atom ("^" integer)?
///   atom   := integer ("/" integer)? | "i" | ("x" | "u") integer | "(" expr ")"
///
/// Throws SyntaxError (with byte offset) or VariableOutOfRange.
Polynomial parse_poly(std::string_view text, int m);

/// Canonical printed form; parse_poly(print_poly(p), m) == p.
std::string print_poly(const Polynomial& p);

}  // namespace harmonic2v::cli
