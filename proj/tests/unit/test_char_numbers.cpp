#include "doctest.h"

#include "algcut/char_numbers.hpp"
#include "algcut/cut.hpp"
#include "algcut/error.hpp"
#include "algcut/localization.hpp"
#include "naive_series.hpp"

using namespace algcut;

namespace {

std::vector<FixedPointDatum> points(std::initializer_list<std::vector<Weight>> weights)
{
    std::vector<FixedPointDatum> out;
    int k = 0;
    for (const auto& w : weights)
        out.push_back(FixedPointDatum::with_poly("p" + std::to_string(++k), w, Poly(1)));
    return out;
}

const auto p1_upper = [] { return cut_fixed_inventory(AmbientWeights({0, 1}), Level(1, 2)).upper_fixed; };
const auto p1xp1_upper = [] { return points({{-1, 1}, {1, -1}, {-1, -1}}); };

} // namespace

TEST_CASE("euler_characteristic")
{
    CHECK(euler_characteristic(p1_upper()) == Rational(1));
    CHECK(euler_characteristic(p1xp1_upper()) == Rational(2));
    CHECK(euler_characteristic(std::vector<FixedPointDatum>{}) == Rational(0));

    const auto orb = cut_fixed_inventory(AmbientWeights({0, 1, 2}), Level(3, 2)).upper_fixed;
    CHECK(euler_characteristic(orb) == Rational(3, 2));
}

TEST_CASE("chern_restriction_cn1")
{
    CHECK(chern_restriction_cn1(std::vector<Weight>{-1}) == Poly(1));
    CHECK(chern_restriction_cn1(std::vector<Weight>{2, 3}) == Poly::monomial(Rational(5), 1));
    CHECK(chern_restriction_cn1(std::vector<Weight>{-1, 1}).is_zero());
    CHECK_THROWS_AS(chern_restriction_cn1(std::vector<Weight>{}), PreconditionError);
}

TEST_CASE("euler characteristic agrees with the residue of c_{n-1}")
{
    for (const auto& [w, q] : {std::pair{AmbientWeights({0, 1}), Level(1, 2)},
                               std::pair{AmbientWeights({-3, 0, 2, 7}), Level(1, 1)},
                               std::pair{AmbientWeights({5, -1, 4, 2, -6}), Level(-5, 2)}}) {
        const auto upper = cut_fixed_inventory(w, q).upper_fixed;
        std::vector<FixedPointDatum> cn1;
        for (const auto& p : upper)
            cn1.push_back(FixedPointDatum::with_poly(p.label, p.tangent_weights,
                                                     chern_restriction_cn1(p.tangent_weights)));
        CHECK(kalkman_integral(cn1) == euler_characteristic(upper));

        // Same thing through the global class c_{n-1}(T P(V)).
        const auto cls = tangent_chern_class(w).homogeneous_part(static_cast<unsigned>(w.dimension() - 1));
        CHECK(kalkman_from_class(w, q, cls).value == euler_characteristic(upper));
    }
}

TEST_CASE("todd_genus")
{
    CHECK(todd_genus(p1_upper(), 3) == Rational(1));
    CHECK(todd_genus(p1xp1_upper(), 4) == Rational(1));
    CHECK(todd_genus(std::vector<FixedPointDatum>{}, 3) == Rational(0));

    SUBCASE("per-point residues for P^1 x P^1")
    {
        // -(0 + 0 + (-1))
        for (const auto& [w, expected] : {std::pair{std::vector<long>{-1, 1}, 0L},
                                          std::pair{std::vector<long>{1, -1}, 0L},
                                          std::pair{std::vector<long>{-1, -1}, -1L}})
            CHECK(naive::todd_residue(w) == expected);
    }

    SUBCASE("independent of the working order")
    {
        const auto upper = points({{1, 2, -3}, {-1, 4, 5}, {2, 2, -7}});
        const auto base = todd_genus(upper, default_todd_order(upper));
        for (int extra = 1; extra <= 4; ++extra)
            CHECK(todd_genus(upper, default_todd_order(upper) + extra) == base);
    }

    SUBCASE("matches the naive series oracle")
    {
        for (const auto& alphas : std::vector<std::vector<long>>{{1}, {-1}, {1, 2}, {2, -3}, {1, 1, 1}, {3, -2, 5, -1}}) {
            const std::vector<Weight> ws(alphas.begin(), alphas.end());
            const auto upper = std::vector<FixedPointDatum>{FixedPointDatum::with_poly("p", ws, Poly(1))};
            CHECK(todd_genus(upper, default_todd_order(upper)).raw() == -naive::todd_residue(alphas));
        }
    }

    SUBCASE("too short an order is a precision error; retries recover")
    {
        const auto upper = points({{1, 2, 3}});
        CHECK_THROWS_AS(todd_genus(upper, 3), PrecisionError);
        CHECK(todd_genus_with_retry(upper, 1) == todd_genus(upper, 5));
        CHECK_THROWS_AS(todd_genus_with_retry(upper, 1, 0), PrecisionError);
    }
}

TEST_CASE("todd_closed_form_comparator")
{
    SUBCASE("P^1: empty closed-form sum")
    {
        const auto cmp = todd_closed_form_comparator(p1_upper());
        CHECK(cmp.series_value == Rational(1));
        CHECK(cmp.closed_form_value == Rational(0));
        CHECK_FALSE(cmp.agree);
    }
    SUBCASE("alpha = (1, 1)")
    {
        const auto cmp = todd_closed_form_comparator(points({{1, 1}}));
        CHECK(cmp.series_value == Rational(-1));
        CHECK(cmp.closed_form_value == Rational(-1));
        CHECK(cmp.agree);
    }
    SUBCASE("alpha = (1, 2)")
    {
        CHECK(naive::todd_residue({1, 2}) == mpq_class(3, 4));
        const auto cmp = todd_closed_form_comparator(points({{1, 2}}));
        CHECK(cmp.series_value == Rational(-3, 4));
        CHECK(cmp.closed_form_value == Rational(-5, 4));
        CHECK_FALSE(cmp.agree);
    }
}
