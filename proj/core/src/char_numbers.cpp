#include "algcut/char_numbers.hpp"

#include <algorithm>

#include "algcut/error.hpp"

namespace algcut {

Rational euler_characteristic(std::span<const FixedPointDatum> upper)
{
    Rational sum;
    for (const auto& p : upper) {
        p.validate();
        for (Weight a : p.tangent_weights)
            sum += Rational(1, a);
    }
    return -sum;
}

Poly chern_restriction_cn1(std::span<const Weight> tangent_weights)
{
    if (tangent_weights.empty())
        throw PreconditionError("chern_restriction_cn1: empty weight list");
    Rational sum;
    for (std::size_t i = 0; i < tangent_weights.size(); ++i) {
        Rational prod(1);
        for (std::size_t j = 0; j < tangent_weights.size(); ++j)
            if (j != i)
                prod *= Rational(tangent_weights[j]);
        sum += prod;
    }
    return Poly::monomial(sum, static_cast<Poly::Exponent>(tangent_weights.size()) - 1);
}

LaurentSeries::Exponent default_todd_order(std::span<const FixedPointDatum> upper)
{
    std::size_t n = 0;
    for (const auto& p : upper)
        n = std::max(n, p.dimension());
    return static_cast<LaurentSeries::Exponent>(n) + 2;
}

Rational todd_genus(std::span<const FixedPointDatum> upper, LaurentSeries::Exponent order)
{
    if (order < 1)
        throw PreconditionError("todd_genus: working order must be positive");
    Rational sum;
    for (const auto& p : upper) {
        p.validate();
        LaurentSeries denom = LaurentSeries::from_poly(Poly(1), order);
        for (Weight a : p.tangent_weights) {
            // 1 - exp(-a t)
            LaurentSeries factor = LaurentSeries::from_poly(Poly(1), order) - series_exp(Rational(-a), order);
            denom = denom * factor;
        }
        sum += residue(series_invert(denom));
    }
    return -sum;
}

Rational todd_genus_with_retry(std::span<const FixedPointDatum> upper, LaurentSeries::Exponent order,
                               int max_retries)
{
    const auto step = std::max<LaurentSeries::Exponent>(default_todd_order(upper), 1);
    for (int attempt = 0;; ++attempt) {
        try {
            return todd_genus(upper, order);
        } catch (const PrecisionError&) {
            if (attempt >= max_retries)
                throw;
            order += step;
        }
    }
}

ToddComparison todd_closed_form_comparator(std::span<const FixedPointDatum> upper)
{
    ToddComparison out;
    out.series_value = todd_genus_with_retry(upper, default_todd_order(upper));
    Rational closed;
    for (const auto& p : upper) {
        const auto& a = p.tangent_weights;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t l = 0; l < a.size(); ++l)
                if (i != l)
                    closed += Rational(a[l]) / Rational(2 * a[i]);
    }
    out.closed_form_value = -closed;
    out.agree = out.series_value == out.closed_form_value;
    return out;
}

} // namespace algcut
