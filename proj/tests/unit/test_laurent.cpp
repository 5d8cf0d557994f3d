#include "doctest.h"

#include <random>

#include "algcut/error.hpp"
#include "algcut/laurent.hpp"
#include "naive_series.hpp"

using namespace algcut;

namespace {

LaurentSeries one(LaurentSeries::Exponent order)
{
    return LaurentSeries::from_poly(Poly(1), order);
}

LaurentSeries one_minus_exp(std::int64_t alpha, LaurentSeries::Exponent order)
{
    return one(order) - series_exp(Rational(-alpha), order);
}

} // namespace

TEST_CASE("series_exp")
{
    const auto e0 = series_exp(Rational(0), 4);
    CHECK(e0.valuation() == 0);
    CHECK(e0.truncation_order() == 4);
    CHECK(e0.coefficient(0) == Rational(1));
    CHECK(e0.coefficient(3) == Rational(0));

    const auto em = series_exp(Rational(-1), 3);
    CHECK(em == LaurentSeries(0, {Rational(1), Rational(-1), Rational(1, 2)}, 3));

    const auto e2 = series_exp(Rational(2), 3);
    CHECK(e2 == LaurentSeries(0, {Rational(1), Rational(2), Rational(2)}, 3));

    CHECK_THROWS_AS(series_exp(Rational(1), 0), PreconditionError);
}

TEST_CASE("series_invert")
{
    SUBCASE("monomial")
    {
        const auto t = LaurentSeries::monomial(Rational(1), 1, 5);
        const auto inv = series_invert(t);
        CHECK(inv.valuation() == -1);
        CHECK(inv.coefficient(-1) == Rational(1));
        CHECK(inv.truncation_order() == 3);
    }
    SUBCASE("constant")
    {
        const auto inv = series_invert(LaurentSeries(0, {Rational(2), Rational(0)}, 2));
        CHECK(inv.coefficient(0) == Rational(1, 2));
        CHECK(inv.coefficient(1) == Rational(0));
    }
    SUBCASE("1 - exp(-t): t^-1 + 1/2 + t/12 + O(t^2)")
    {
        const auto s = one_minus_exp(1, 4);
        const auto inv = series_invert(s);
        CHECK(inv.valuation() == -1);
        CHECK(inv.truncation_order() == 2);
        CHECK(inv.coefficient(-1) == Rational(1));
        CHECK(inv.coefficient(0) == Rational(1, 2));
        CHECK(inv.coefficient(1) == Rational(1, 12));
        CHECK_THROWS_AS(inv.coefficient(2), PrecisionError);

        // Multiply back: the product is 1 on every known coefficient.
        const auto prod = s * inv;
        CHECK(agree_on_common_window(prod, one(prod.truncation_order())));
        CHECK(prod.truncation_order() >= 1);
    }
    SUBCASE("zero up to truncation is not invertible")
    {
        CHECK_THROWS_AS(series_invert(LaurentSeries::zero(3)), PrecisionError);
        CHECK_THROWS_AS(series_invert(LaurentSeries(0, {Rational(0), Rational(0)}, 2)), PrecisionError);
    }
}

TEST_CASE("laurent_arith")
{
    const auto t_inv = LaurentSeries::monomial(Rational(1), -1, 4);
    const auto t = LaurentSeries::monomial(Rational(1), 1, 6);
    const auto prod = laurent_arith(t_inv, t, SeriesOp::mul);
    CHECK(prod.coefficient(0) == Rational(1));
    CHECK(prod.valuation() == 0);

    const auto a = LaurentSeries(-1, {Rational(1), Rational(1)}, 3);
    const auto b = LaurentSeries::monomial(Rational(-1), -1, 3);
    const auto sum = laurent_arith(a, b, SeriesOp::add);
    CHECK(sum.valuation() == 0);
    CHECK(sum.coefficient(0) == Rational(1));
    CHECK(sum.coefficient(2) == Rational(0));

    SUBCASE("product truncation accounts for valuations")
    {
        // t(1 + O(t^3)) * (1 + t + O(t^2)) is known below t^3.
        const auto x = LaurentSeries(1, {Rational(1)}, 4);
        const auto y = LaurentSeries(0, {Rational(1), Rational(1)}, 2);
        CHECK((x * y).truncation_order() == 3);
    }
}

TEST_CASE("residue")
{
    CHECK(residue(LaurentSeries::monomial(Rational(1), -1, 0)) == Rational(1));
    CHECK(residue(LaurentSeries(0, {Rational(3), Rational(5)}, 2)) == Rational(0));
    for (std::int64_t n = 1; n <= 4; ++n) {
        // t^(n-1) / (c t^n)
        const Rational c(7, 3);
        const auto num = LaurentSeries::monomial(Rational(1), n - 1, n + 2);
        const auto den = LaurentSeries::monomial(c, n, n + 3);
        CHECK(residue(num * series_invert(den)) == c.inverse());
    }
    CHECK_THROWS_AS(residue(LaurentSeries::monomial(Rational(1), -3, -1)), PrecisionError);
}

TEST_CASE("structural invariants on random series")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> small(-6, 6);
    std::uniform_int_distribution<int> pos(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t v = small(rng) / 2;
        const int len = pos(rng);
        std::vector<Rational> c;
        for (int k = 0; k < len; ++k)
            c.push_back(Rational(small(rng), pos(rng)));
        if (c.front().is_zero())
            c.front() = Rational(-2);
        const LaurentSeries s(v, c, v + len);
        const auto inv = series_invert(s);
        CHECK(inv.valuation() == -s.valuation());
        const auto prod = s * inv;
        CHECK(agree_on_common_window(prod, one(prod.truncation_order())));

        const LaurentSeries r(v - 1, {Rational(small(rng)), Rational(1)}, v + 3);
        if ((s + r).truncation_order() > -1)
            CHECK(residue(s + r) == residue(s) + residue(r));
    }
}

TEST_CASE("truncation soundness against the naive power-series oracle")
{
    for (std::int64_t alpha : {-3, -1, 1, 2, 5}) {
        for (LaurentSeries::Exponent order : {3, 5, 8}) {
            const auto inv = series_invert(one_minus_exp(alpha, order));
            // Oracle: 1/(1 - e^{-a t}) = t^-1 * inv(g), g = (1 - e^{-a t})/t.
            const auto g = naive::inv(naive::one_minus_exp_over_t(alpha, 12), 12);
            for (auto e = inv.valuation(); e < inv.truncation_order(); ++e)
                CHECK(inv.coefficient(e).raw() == g[static_cast<std::size_t>(e + 1)]);
        }
    }
}
