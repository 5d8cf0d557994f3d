#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "algcut/poly.hpp"
#include "algcut/rational.hpp"

namespace algcut {

/// Truncated Laurent series in t over the rationals.
///
/// Coefficients of exponents in [valuation, truncation_order) are known
/// exactly; coefficients at or beyond truncation_order are unknown. A series
/// with no nonzero known coefficient is "zero up to truncation" and reports
/// valuation == truncation_order.
///
/// Every arithmetic operation propagates the tightest truncation order that
/// keeps all reported coefficients exact.
class LaurentSeries {
public:
    using Exponent = std::int64_t;

    /// Series sum_k coeffs[k] t^(start + k) + O(t^truncation).
    /// Throws PreconditionError if a coefficient would lie at or beyond the
    /// truncation order.
    LaurentSeries(Exponent start, std::vector<Rational> coeffs, Exponent truncation);

    static LaurentSeries zero(Exponent truncation);
    static LaurentSeries monomial(const Rational& c, Exponent e, Exponent truncation);
    /// Exact polynomial viewed as a series known up to `truncation`
    /// (terms at or above the truncation are dropped).
    static LaurentSeries from_poly(const Poly& p, Exponent truncation);

    Exponent valuation() const { return valuation_; }
    Exponent truncation_order() const { return truncation_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of t^e. Throws PrecisionError if e >= truncation_order.
    Rational coefficient(Exponent e) const;
    /// Leading coefficient. Throws PrecisionError when zero up to truncation.
    Rational leading_coefficient() const;

    /// Multiplies by t^k (exact; the truncation order shifts with it).
    LaurentSeries shifted(Exponent k) const;
    /// Forgets every coefficient at exponent >= order (order may only shrink).
    LaurentSeries truncated(Exponent order) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const Rational& c);
    friend LaurentSeries operator*(const Rational& c, const LaurentSeries& a) { return a * c; }

    /// Structural equality: same known window and same coefficients.
    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

    /// "t^-1 + 1/2 + 1/12*t + O(t^2)"
    std::string to_string() const;

private:
    LaurentSeries() = default;
    void normalize();

    Exponent valuation_ = 0;
    Exponent truncation_ = 0;
    // coeffs_[k] is the coefficient of t^(valuation_ + k); no trailing zeros.
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

/// True iff a and b agree on every exponent known to both.
bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b);

enum class SeriesOp { add, mul };

LaurentSeries laurent_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op);

/// sum_{k < order} c^k t^k / k!
LaurentSeries series_exp(const Rational& c, LaurentSeries::Exponent order);

/// Multiplicative inverse. Throws PrecisionError if s is zero up to truncation.
LaurentSeries series_invert(const LaurentSeries& s);

/// Coefficient of t^-1. Throws PrecisionError if that exponent lies outside
/// the known window.
Rational residue(const LaurentSeries& s);

} // namespace algcut
