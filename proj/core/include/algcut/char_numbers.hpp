#pragma once

#include <span>

#include "algcut/fixed_point.hpp"
#include "algcut/poly.hpp"
#include "algcut/rational.hpp"

namespace algcut {

// Characteristic numbers of the quotient Y = X^s(q)/T from the isolated
// fixed points of X above the level. The formulas assume T acts freely on
// the stable locus; otherwise the values are rational orbifold quantities.

/// chi(Y) = -sum_p sum_i 1/alpha_i(p)
Rational euler_characteristic(std::span<const FixedPointDatum> upper);

/// c_{n-1}^T(T_X)|_p = t^(n-1) sum_i prod_{j != i} alpha_j(p)
Poly chern_restriction_cn1(std::span<const Weight> tangent_weights);

/// Smallest working order that is always enough for todd_genus.
LaurentSeries::Exponent default_todd_order(std::span<const FixedPointDatum> upper);

/// chi(O_Y) = -sum_p Res_{t=0} 1 / prod_i (1 - exp(-t alpha_i(p))), with each
/// exponential expanded to `order` terms. Throws PrecisionError when the
/// order is too short to expose the residue (any order >= n + 1 suffices).
Rational todd_genus(std::span<const FixedPointDatum> upper, LaurentSeries::Exponent order);

/// Runs todd_genus from `order`, raising the order on PrecisionError up to
/// `max_retries` times before rethrowing.
Rational todd_genus_with_retry(std::span<const FixedPointDatum> upper, LaurentSeries::Exponent order,
                               int max_retries = 4);

struct ToddComparison {
    Rational series_value;
    Rational closed_form_value;
    bool agree = false;
};

/// Compares the series residue against -sum_p sum_{i != l} alpha_l / (2 alpha_i).
ToddComparison todd_closed_form_comparator(std::span<const FixedPointDatum> upper);

} // namespace algcut
