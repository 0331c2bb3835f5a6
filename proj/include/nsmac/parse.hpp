#pragma once

// Expression parser for the text form emitted by the renderer: integers, q,
// t, x<i>, parentheses and + - * / ^.  Division is only defined when the
// divisor is free of the x variables, so coefficients stay rational in q,t
// while x exponents stay integral.

#include "nsmac/xpoly.hpp"

#include <string_view>

namespace nsmac {

// Parse a polynomial in x_1..x_n.  Throws std::invalid_argument with a
// position-annotated message on malformed input.
XPolynomial parse_xpoly(std::string_view text, int n);

// Parse an x-free expression into a single coefficient.
QTRational parse_qtrational(std::string_view text);

}  // namespace nsmac
