#include "doctest.h"

#include <cstdlib>
#include <random>

#include "algcut/error.hpp"
#include "algcut/weights.hpp"

using namespace algcut;

namespace {

SupportPattern pat(std::initializer_list<std::size_t> one_based)
{
    std::vector<std::size_t> idx;
    for (auto i : one_based)
        idx.push_back(i - 1);
    return SupportPattern(idx);
}

// Brute force: the largest d such that every pairwise difference is a
// multiple of d (the weights then factor through mu_d).
std::int64_t brute_stabilizer(const std::set<Weight>& pi)
{
    std::int64_t span = *pi.rbegin() - *pi.begin();
    for (std::int64_t d = span; d >= 1; --d) {
        bool ok = true;
        for (Weight a : pi)
            for (Weight b : pi)
                ok = ok && ((a - b) % d == 0);
        if (ok)
            return d;
    }
    return 0;
}

} // namespace

TEST_CASE("support_weights")
{
    CHECK(support_weights(pat({1}), AmbientWeights({0, 1})) == std::set<Weight>{0});
    CHECK(support_weights(pat({1, 2}), AmbientWeights({0, 1})) == std::set<Weight>{0, 1});
    CHECK(support_weights(pat({1, 3}), AmbientWeights({-1, 5, -1})) == std::set<Weight>{-1});
    CHECK_THROWS_AS(support_weights(pat({3}), AmbientWeights({0, 1})), PreconditionError);
}

TEST_CASE("empty inputs are rejected")
{
    CHECK_THROWS_AS(AmbientWeights({}), PreconditionError);
    CHECK_THROWS_AS(SupportPattern({}), PreconditionError);
    CHECK_THROWS_AS(SupportPattern::from_mask(0), PreconditionError);
}

TEST_CASE("is_stable and is_in_upper")
{
    const AmbientWeights w2({-2, 1});
    CHECK(is_stable(pat({1, 2}), w2, Level(0, 1)));
    const AmbientWeights w12({1, 2});
    CHECK_FALSE(is_stable(pat({1, 2}), w12, Level(0, 1)));
    CHECK(is_in_upper(pat({1, 2}), w12, Level(0, 1)));
    const AmbientWeights w01({0, 1});
    CHECK(is_stable(pat({1, 2}), w01, Level(1, 2)));
    CHECK(is_in_upper(pat({1, 2}), w01, Level(1, 2)));
    CHECK_FALSE(is_in_upper(pat({1, 2}), AmbientWeights({-1, -3}), Level(0, 1)));

    CHECK_THROWS_AS(is_stable(pat({1, 2}), w01, Level(1, 1)), PreconditionError);
}

TEST_CASE("is_regular_level")
{
    CHECK(is_regular_level(AmbientWeights({0, 1}), Level(1, 2)));
    CHECK_FALSE(is_regular_level(AmbientWeights({0, 1}), Level(1, 1)));
    CHECK(is_regular_level(AmbientWeights({-1, 1}), Level(0, 1)));
    CHECK_FALSE(is_regular_level(AmbientWeights({4, 7}), Level(8, 2)));
}

TEST_CASE("reweight")
{
    CHECK(reweight(AmbientWeights({0, 1}), Level(0, 1)) == AmbientWeights({0, 1}));
    CHECK(reweight(AmbientWeights({0, 1}), Level(1, 2)) == AmbientWeights({-1, 1}));
    CHECK(reweight(AmbientWeights({0, 1, 2}), Level(3, 2)) == AmbientWeights({-3, -1, 1}));
    // Sign check for the two examples above.
    for (auto [w, q] : {std::pair{AmbientWeights({0, 1}), Level(1, 2)},
                        std::pair{AmbientWeights({0, 1, 2}), Level(3, 2)}}) {
        const auto rw = reweight(w, q);
        for (std::size_t i = 0; i < w.size(); ++i)
            CHECK((Rational(w[i]) > q.value()) == (rw[i] > 0));
    }
}

TEST_CASE("reweight soundness on every pattern")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Weight> wd(-9, 9);
    std::uniform_int_distribution<std::int64_t> num(-30, 30);
    std::uniform_int_distribution<std::int64_t> den(1, 5);
    int checked = 0;
    while (checked < 200) {
        std::vector<Weight> ws(static_cast<std::size_t>(1 + checked % 5));
        for (auto& a : ws)
            a = wd(rng);
        const AmbientWeights w(ws);
        const Level q(num(rng), den(rng));
        if (!is_regular_level(w, q))
            continue;
        ++checked;
        const auto rw = reweight(w, q);
        for (const auto& p : all_patterns(w.size())) {
            CHECK(is_stable(p, w, q) == is_stable(p, rw, Level(0, 1)));
            CHECK(is_in_upper(p, w, q) == is_in_upper(p, rw, Level(0, 1)));
        }
    }
}

TEST_CASE("stability classes are exhaustive and monotone")
{
    const AmbientWeights w({-3, -1, 2, 2, 5});
    const Level q(1, 3);
    for (const auto& p : all_patterns(w.size())) {
        const auto pi = support_weights(p, w);
        const bool all_above = Rational(*pi.begin()) > q.value();
        const bool all_below = Rational(*pi.rbegin()) < q.value();
        CHECK((is_stable(p, w, q) ? 1 : 0) + (all_above ? 1 : 0) + (all_below ? 1 : 0) == 1);
        if (is_stable(p, w, q))
            for (std::size_t extra = 0; extra < w.size(); ++extra) {
                std::vector<std::size_t> bigger(p.indices().begin(), p.indices().end());
                bigger.push_back(extra);
                CHECK(is_stable(SupportPattern(bigger), w, q));
            }
    }
}

TEST_CASE("stabilizer_order")
{
    const AmbientWeights w({0, 1, 2, 4});
    CHECK(stabilizer_order(pat({1, 2}), w) == StabilizerOrder::finite(1));
    CHECK(stabilizer_order(pat({2}), w).is_infinite());
    CHECK(stabilizer_order(pat({1, 3, 4}), w) == StabilizerOrder::finite(2));

    // Against brute force over every pattern of a wider vector.
    const AmbientWeights wide({-6, -3, 0, 3, 9, 4});
    for (const auto& p : all_patterns(wide.size())) {
        const auto pi = support_weights(p, wide);
        const auto s = stabilizer_order(p, wide);
        if (pi.size() == 1)
            CHECK(s.is_infinite());
        else
            CHECK(s.value() == brute_stabilizer(pi));
    }
}

TEST_CASE("is_free_on_stable")
{
    CHECK(is_free_on_stable(AmbientWeights({0, 1}), Level(1, 2)));
    CHECK_FALSE(is_free_on_stable(AmbientWeights({0, 2}), Level(1, 2)));
    CHECK_FALSE(is_free_on_stable(AmbientWeights({0, 1, 2}), Level(1, 2)));
    const auto witness = non_free_witness(AmbientWeights({0, 1, 2}), Level(1, 2));
    REQUIRE(witness.has_value());
    CHECK(witness->to_string() == "{1,3}");
    CHECK_THROWS_AS(is_free_on_stable(AmbientWeights({0, 1}), Level(0, 1)), PreconditionError);
}
