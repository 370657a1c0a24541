#pragma once

#include <string>

#include "laxforge/diffpoly.hpp"

namespace laxforge {

/**
 * Canonical text grammar shared by reports, JSON payloads and the
 * reference data files:
 *
 *   q1x2          second x-derivative of q_1
 *   A1_2x         first x-derivative of the coefficient symbol A_1^(2)
 *   L^n           n-th power of the spectral symbol
 *   Dinv(...)     formal antiderivative
 *   Dx(...)       total x-derivative, evaluated while parsing
 *   i, s7         imaginary unit and sqrt(7)
 *   q1^2          powers; products are '*'-separated
 *
 * parse_poly(to_text(p)) == p for every canonical polynomial.
 */
std::string to_text(const DiffPoly& p);

// Throws std::invalid_argument with a position-tagged message on bad input.
DiffPoly parse_poly(const std::string& text);

// LaTeX rendering: subscripted derivatives (q_{1xx}), \partial^{-1} for
// Dinv, \lambda powers, coefficient symbols as A_1^{(2)}.
std::string to_latex(const DiffPoly& p);

std::string indet_to_text(const Indet& v);
std::string scalar_to_text(const Scalar& s);

}  // namespace laxforge
