#pragma once

#include <string>

#include "berktree/ext_field.hpp"
#include "berktree/rational_poly.hpp"
#include "berktree/valuation.hpp"

namespace berktree {

class LaurentPoly;

/// Plain-text polynomial grammar: terms `c*V^k` joined by `+`/`-`, with
/// coefficients as decimal integers or fractions `n/d`. Examples:
/// "T^2 - 2", "T^3 + 2/3*T - 6", "alpha^2 + 1".
RatPoly parse_poly(const std::string& text, const std::string& var = "T");
std::string format_poly(const RatPoly& f, const std::string& var = "T");

/// Element of K written in the generator: same grammar with variable
/// `alpha`; powers at or above the degree reduce modulo the defining
/// polynomial.
FieldElt parse_element(const std::string& text, const ExtField& K);
std::string format_element(const FieldElt& x);

/// Laurent polynomials in variables x1..xn with integer (possibly
/// negative) exponents, e.g. "3*x1^2*x2^-1 + 1/2".
LaurentPoly parse_laurent(const std::string& text, int rank);
std::string format_laurent(const LaurentPoly& f);

/// Valuation literal: "3/2", "-1", or "inf".
Valuation parse_valuation(const std::string& text);

/// Field identifier as produced by ExtField::id(): "Q_2" or
/// "Q_2[T]/(T^2 - 2)".
ExtField parse_field_id(const std::string& id);

}  // namespace berktree
