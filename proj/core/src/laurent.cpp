#include "algcut/laurent.hpp"

#include <algorithm>
#include <ostream>

#include "algcut/error.hpp"

namespace algcut {

LaurentSeries::LaurentSeries(Exponent start, std::vector<Rational> coeffs, Exponent truncation)
    : valuation_(start), truncation_(truncation), coeffs_(std::move(coeffs))
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    if (start + static_cast<Exponent>(coeffs_.size()) > truncation)
        throw PreconditionError("LaurentSeries: coefficient beyond truncation order");
    normalize();
}

void LaurentSeries::normalize()
{
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const Rational& c) { return !c.is_zero(); });
    valuation_ += first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    if (coeffs_.empty())
        valuation_ = truncation_;
}

LaurentSeries LaurentSeries::zero(Exponent truncation)
{
    return LaurentSeries(truncation, {}, truncation);
}

LaurentSeries LaurentSeries::monomial(const Rational& c, Exponent e, Exponent truncation)
{
    if (e >= truncation)
        return zero(truncation);
    return LaurentSeries(e, {c}, truncation);
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, Exponent truncation)
{
    if (p.is_zero() || *p.low_degree() >= truncation)
        return zero(truncation);
    Exponent lo = *p.low_degree();
    Exponent hi = std::min(*p.degree(), truncation - 1);
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : p.terms())
        if (e <= hi)
            c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentSeries(lo, std::move(c), truncation);
}

Rational LaurentSeries::coefficient(Exponent e) const
{
    if (e >= truncation_)
        throw PrecisionError("coefficient of t^" + std::to_string(e) +
                             " requested but series is only known below t^" +
                             std::to_string(truncation_));
    if (e < valuation_ || e >= valuation_ + static_cast<Exponent>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(e - valuation_)];
}

Rational LaurentSeries::leading_coefficient() const
{
    if (is_zero())
        throw PrecisionError("series is zero up to O(t^" + std::to_string(truncation_) + ")");
    return coeffs_.front();
}

LaurentSeries LaurentSeries::shifted(Exponent k) const
{
    LaurentSeries r = *this;
    r.valuation_ += k;
    r.truncation_ += k;
    return r;
}

LaurentSeries LaurentSeries::truncated(Exponent order) const
{
    if (order >= truncation_)
        return *this;
    std::vector<Rational> c;
    for (Exponent e = valuation_; e < order; ++e)
        c.push_back(coefficient(e));
    return LaurentSeries(std::min(valuation_, order), std::move(c), order);
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b)
{
    const auto trunc = std::min(a.truncation_, b.truncation_);
    const auto lo = std::min(a.valuation_, b.valuation_);
    if (lo >= trunc)
        return LaurentSeries::zero(trunc);
    std::vector<Rational> c(static_cast<std::size_t>(trunc - lo));
    for (auto e = lo; e < trunc; ++e)
        c[static_cast<std::size_t>(e - lo)] = a.coefficient(e) + b.coefficient(e);
    return LaurentSeries(lo, std::move(c), trunc);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b)
{
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b)
{
    // a = t^va (known below Ta), b = t^vb (known below Tb): the product's
    // coefficient at e involves a_i b_j with i + j = e, each exact only while
    // i < Ta and j < Tb.
    const auto trunc = std::min(a.truncation_ + b.valuation_, b.truncation_ + a.valuation_);
    const auto lo = a.valuation_ + b.valuation_;
    if (a.is_zero() || b.is_zero() || lo >= trunc)
        return LaurentSeries::zero(trunc);
    std::vector<Rational> c(static_cast<std::size_t>(trunc - lo));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LaurentSeries(lo, std::move(c), trunc);
}

LaurentSeries operator*(const LaurentSeries& a, const Rational& c)
{
    if (c.is_zero())
        return LaurentSeries::zero(a.truncation_);
    LaurentSeries r = a;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

std::string LaurentSeries::to_string() const
{
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        const Exponent e = valuation_ + static_cast<Exponent>(k);
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1))
            out += mag.to_string() + "*";
        out += "t";
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    if (!out.empty())
        out += " + ";
    out += "O(t^" + std::to_string(truncation_) + ")";
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s)
{
    return os << s.to_string();
}

bool agree_on_common_window(const LaurentSeries& a, const LaurentSeries& b)
{
    const auto trunc = std::min(a.truncation_order(), b.truncation_order());
    const auto lo = std::min(a.valuation(), b.valuation());
    for (auto e = lo; e < trunc; ++e)
        if (a.coefficient(e) != b.coefficient(e))
            return false;
    return true;
}

LaurentSeries laurent_arith(const LaurentSeries& a, const LaurentSeries& b, SeriesOp op)
{
    return op == SeriesOp::add ? a + b : a * b;
}

LaurentSeries series_exp(const Rational& c, LaurentSeries::Exponent order)
{
    if (order < 1)
        throw PreconditionError("series_exp: order must be at least 1");
    std::vector<Rational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order));
    Rational term(1);
    for (LaurentSeries::Exponent k = 0; k < order; ++k) {
        if (k > 0)
            term = term * c / Rational(k);
        coeffs.push_back(term);
    }
    return LaurentSeries(0, std::move(coeffs), order);
}

LaurentSeries series_invert(const LaurentSeries& s)
{
    if (s.is_zero())
        throw PrecisionError("series_invert: series is zero up to O(t^" +
                             std::to_string(s.truncation_order()) + ")");
    const auto v = s.valuation();
    const auto known = s.truncation_order() - v; // relative precision
    const Rational inv_lead = s.leading_coefficient().inverse();
    std::vector<Rational> u(static_cast<std::size_t>(known));
    u[0] = inv_lead;
    for (std::int64_t k = 1; k < known; ++k) {
        Rational acc;
        for (std::int64_t j = 1; j <= k; ++j) {
            const Rational sj = s.coefficient(v + j);
            if (!sj.is_zero())
                acc += sj * u[static_cast<std::size_t>(k - j)];
        }
        u[static_cast<std::size_t>(k)] = -acc * inv_lead;
    }
    return LaurentSeries(-v, std::move(u), -v + known);
}

Rational residue(const LaurentSeries& s)
{
    if (s.truncation_order() <= -1)
        throw PrecisionError("residue: coefficient of t^-1 lies outside the known window (O(t^" +
                             std::to_string(s.truncation_order()) + "))");
    return s.coefficient(-1);
}

} // namespace algcut
