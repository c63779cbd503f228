#ifndef EISENKIT_PARSE_HPP
#define EISENKIT_PARSE_HPP

#include <string>

#include "eisenkit/bipoly.hpp"

namespace eisenkit {

// Grammar: integer and rational literals a/b; variables z, w; operators
// + - * ^ and parentheses; '*' is optional before variables and '('.
// Whitespace is insignificant. Throws ParseError with line/column.
QBiPoly parse_bipoly(const std::string& text);

// Univariate input in the named variable (used for field moduli, "x^2 - 2").
QPoly parse_unipoly(const std::string& text, char variable);

// Canonical printer: graded-lex monomial order (total degree descending,
// then z-exponent descending), round-trips through parse_bipoly.
std::string print_bipoly(const QBiPoly& p);

std::string print_unipoly(const QPoly& p, char variable);

std::string print_rational(const Rational& q);

}  // namespace eisenkit

#endif
