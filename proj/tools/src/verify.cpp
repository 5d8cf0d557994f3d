#include "algcut_app/verify.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <random>
#include <sstream>

namespace algcut::app {

namespace {

using Rng = std::mt19937_64;

class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::string& what)
    {
        ++result_.checks;
        if (!ok && result_.failures++ == 0)
            result_.first_failure = what;
    }

    SuiteResult done() && { return std::move(result_); }

private:
    SuiteResult result_;
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, std::int64_t range = 9)
{
    return Rational(uniform(rng, -range, range), uniform(rng, 1, range));
}

std::vector<Weight> distinct_weights(Rng& rng, std::size_t n, Weight lo, Weight hi)
{
    std::vector<Weight> pool;
    for (Weight a = lo; a <= hi; ++a)
        pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    return pool;
}

LaurentSeries random_series(Rng& rng)
{
    const auto v = uniform(rng, -3, 3);
    const auto len = uniform(rng, 1, 8);
    std::vector<Rational> c;
    for (std::int64_t k = 0; k < len; ++k)
        c.push_back(random_rational(rng));
    if (c.front().is_zero())
        c.front() = Rational(1);
    return LaurentSeries(v, std::move(c), v + len);
}

EquivariantClass random_homogeneous(Rng& rng, const AmbientWeights& w, unsigned degree)
{
    EquivariantClass c(w);
    for (unsigned k = 0; k <= degree; ++k)
        c += EquivariantClass::monomial(w, random_rational(rng), k, degree - k);
    return c;
}

// Nonzero weights in [lo, hi], as nondecreasing tuples of length n.
template <typename F>
void for_each_nondecreasing(std::size_t n, Weight lo, Weight hi, F&& visit)
{
    std::vector<Weight> values;
    for (Weight a = lo; a <= hi; ++a)
        if (a != 0)
            values.push_back(a);
    std::vector<std::size_t> idx(n, 0);
    std::vector<Weight> ws(n);
    for (;;) {
        for (std::size_t k = 0; k < n; ++k)
            ws[k] = values[idx[k]];
        visit(ws);
        std::size_t k = n;
        while (k > 0 && idx[k - 1] == values.size() - 1)
            --k;
        if (k == 0)
            return;
        ++idx[k - 1];
        for (std::size_t j = k; j < n; ++j)
            idx[j] = idx[k - 1];
    }
}

std::string vec_str(std::span<const Weight> ws)
{
    return AmbientWeights(std::vector<Weight>(ws.begin(), ws.end())).to_string();
}

SuiteResult exact_arith_suite(Rng& rng)
{
    Suite s("exact-arith");
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_series(rng);
        const auto inv = series_invert(a);
        const auto prod = a * inv;
        s.check(agree_on_common_window(prod, LaurentSeries::from_poly(Poly(1), prod.truncation_order())),
                "s * invert(s) != 1 for " + a.to_string());

        const auto b = random_series(rng);
        const auto sum = a + b;
        if (sum.truncation_order() > -1)
            s.check(residue(sum) == residue(a) + residue(b), "residue not additive");
    }
    // Truncation soundness: a short computation agrees with a longer one.
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = uniform(rng, 1, 4);
        const auto order = uniform(rng, n + 1, n + 4);
        auto build = [&](LaurentSeries::Exponent ord, const std::vector<Weight>& alphas) {
            LaurentSeries d = LaurentSeries::from_poly(Poly(1), ord);
            for (Weight x : alphas)
                d = d * (LaurentSeries::from_poly(Poly(1), ord) - series_exp(Rational(-x), ord));
            return series_invert(d);
        };
        std::vector<Weight> alphas;
        for (std::int64_t i = 0; i < n; ++i) {
            Weight x = uniform(rng, -5, 5);
            alphas.push_back(x == 0 ? 1 : x);
        }
        const auto short_run = build(order, alphas);
        const auto long_run = build(order + 6, alphas);
        s.check(long_run.truncation_order() >= short_run.truncation_order() &&
                    agree_on_common_window(short_run, long_run),
                "truncated inverse disagrees with longer recomputation for alphas " + vec_str(alphas));
    }
    return std::move(s).done();
}

SuiteResult weight_model_suite(Rng& rng)
{
    Suite s("weight-model");
    for (int trial = 0; trial < 500; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
        std::vector<Weight> ws;
        for (std::size_t i = 0; i < n; ++i)
            ws.push_back(uniform(rng, -9, 9));
        const AmbientWeights w(ws);
        Level q(uniform(rng, -20, 20), uniform(rng, 1, 4));
        if (!is_regular_level(w, q))
            q = Level(Rational(2 * uniform(rng, -10, 10) + 1, 2));
        const auto rw = reweight(w, q);
        for (std::size_t i = 0; i < n; ++i)
            s.check((Rational(w[i]) > q.value()) == (rw[i] > 0), "reweight changed a sign");
        const auto p = SupportPattern::from_mask(static_cast<std::uint64_t>(uniform(rng, 1, (1 << n) - 1)));
        const Level zero(0, 1);
        s.check(is_stable(p, w, q) == is_stable(p, rw, zero), "reweight changed stability of " + p.to_string());
        s.check(is_in_upper(p, w, q) == is_in_upper(p, rw, zero), "reweight changed X_{>q} membership");

        const auto pi = support_weights(p, w);
        const bool above = Rational(*pi.begin()) > q.value();
        const bool below = Rational(*pi.rbegin()) < q.value();
        const int count = (is_stable(p, w, q) ? 1 : 0) + (above ? 1 : 0) + (below ? 1 : 0);
        s.check(count == 1, "pattern not in exactly one stability class");

        for (std::size_t extra = 0; extra < n; ++extra) {
            std::vector<std::size_t> bigger(p.indices().begin(), p.indices().end());
            bigger.push_back(extra);
            if (is_stable(p, w, q))
                s.check(is_stable(SupportPattern(bigger), w, q), "enlarging a stable pattern broke stability");
        }
    }
    return std::move(s).done();
}

SuiteResult cut_construction_suite(Rng& rng)
{
    Suite s("cut-construction");
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
        std::vector<Weight> ws;
        for (std::size_t i = 0; i < n; ++i) {
            Weight a = uniform(rng, -9, 9);
            ws.push_back(a == 0 ? 1 : a);
        }
        const AmbientWeights w(ws);
        const Level zero(0, 1);
        for (const auto& p : all_patterns(n)) {
            s.check((classify_affine_cut_point(p, w, CutCoordinate::finite_nonzero) == InstabilityType::stable) ==
                        is_in_upper(p, w, zero),
                    "open chart classification disagrees with X_{>0} for " + p.to_string());
            s.check((classify_affine_cut_point(p, w, CutCoordinate::zero_section) == InstabilityType::stable) ==
                        is_stable(p, w, zero),
                    "zero-section classification disagrees with X^s for " + p.to_string());
        }
        const Weight max_a = *std::max_element(ws.begin(), ws.end());
        const auto psi = psi_weight_check(w, max_a + uniform(rng, 1, 10));
        s.check(psi.zero_free, "0 appeared among antidiagonal weights");

        const auto distinct = distinct_weights(rng, n, -9, 9);
        const AmbientWeights wd(distinct);
        const Level q(Rational(2 * uniform(rng, -10, 9) + 1, 2));
        const auto inv = cut_fixed_inventory(wd, q);
        const auto above = std::count_if(distinct.begin(), distinct.end(),
                                         [&](Weight a) { return Rational(a) > q.value(); });
        s.check(static_cast<std::ptrdiff_t>(inv.upper_fixed.size()) == above, "inventory count mismatch");
        bool any_stable = false;
        for (const auto& p : all_patterns(n))
            any_stable = any_stable || is_stable(p, wd, q);
        s.check(inv.reduced_present == any_stable, "reduced_present disagrees with stable locus");
    }
    return std::move(s).done();
}

SuiteResult localization_suite(Rng& rng)
{
    Suite s("localization-engine");
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
        const AmbientWeights w(distinct_weights(rng, n, -9, 9));
        const auto c = random_homogeneous(rng, w, static_cast<unsigned>(w.dimension() - 1));
        s.check(total_residue(w, c).is_zero(), "global residue nonzero for " + w.to_string() + ", " + c.to_string());
    }
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 1, 6));
        const AmbientWeights w(distinct_weights(rng, n, -9, 9));
        const auto total = tangent_chern_class(w);
        for (std::size_t i = 0; i < n; ++i) {
            Poly expected(1);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    expected *= Poly(1) + Poly::monomial(Rational(w[j] - w[i]), 1);
            s.check(restrict_at_fixed_point(total, i) == expected, "Euler-sequence identity fails for " + w.to_string());

            const auto hn = EquivariantClass::h(w).pow(static_cast<unsigned>(n));
            s.check(restrict_at_fixed_point(hn, i) == Poly::monomial(Rational(-w[i]).pow(static_cast<unsigned>(n)),
                                                                     static_cast<Poly::Exponent>(n)),
                    "reduction of h^n is inconsistent with restriction");
        }
        EquivariantClass relation(w, Rational(1));
        for (std::size_t j = 0; j < n; ++j)
            relation *= EquivariantClass::h(w) + EquivariantClass::monomial(w, Rational(w[j]), 0, 1);
        s.check(relation.is_zero(), "defining relation does not reduce to zero for " + w.to_string());
        const auto a = random_homogeneous(rng, w, static_cast<unsigned>(uniform(rng, 0, 3)));
        const auto b = random_homogeneous(rng, w, static_cast<unsigned>(uniform(rng, 0, 3)));
        for (std::size_t i = 0; i < n; ++i)
            s.check(restrict_at_fixed_point(a * b, i) ==
                        restrict_at_fixed_point(a, i) * restrict_at_fixed_point(b, i),
                    "restriction is not multiplicative");
    }
    // Chamber constancy.
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 5));
        auto ws = distinct_weights(rng, n, -9, 9);
        const AmbientWeights w(ws);
        std::sort(ws.begin(), ws.end());
        const auto k = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(n) - 2));
        const Rational lo(ws[k]);
        const Rational width = Rational(ws[k + 1]) - lo;
        const auto c = random_homogeneous(rng, w, static_cast<unsigned>(w.dimension() - 1));
        const auto ref = kalkman_from_class(w, Level(lo + width * Rational(1, 2)), c).value;
        for (const Rational& frac : {Rational(1, 5), Rational(3, 7), Rational(9, 10)})
            s.check(kalkman_from_class(w, Level(lo + width * frac), c).value == ref,
                    "kalkman value changed inside a chamber for " + w.to_string());
    }
    return std::move(s).done();
}

SuiteResult char_numbers_suite(Rng& rng)
{
    Suite s("char-numbers");
    for (int trial = 0; trial < 100; ++trial) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
        const AmbientWeights w(distinct_weights(rng, n, -9, 9));
        const Level q(Rational(2 * uniform(rng, -10, 9) + 1, 2));
        const auto upper = cut_fixed_inventory(w, q).upper_fixed;

        std::vector<FixedPointDatum> cn1;
        for (const auto& p : upper)
            cn1.push_back(FixedPointDatum::with_poly(p.label, p.tangent_weights, chern_restriction_cn1(p.tangent_weights)));
        s.check(kalkman_integral(cn1) == euler_characteristic(upper),
                "c_{n-1} residue route disagrees with chi formula for " + w.to_string());

        const auto order = default_todd_order(upper);
        s.check(todd_genus(upper, order) == todd_genus(upper, order + 3),
                "todd genus depends on working order for " + w.to_string());
    }
    // Known free quotients: a point and P^1.
    const auto p1 = cut_fixed_inventory(AmbientWeights({0, 1}), Level(1, 2)).upper_fixed;
    s.check(euler_characteristic(p1) == Rational(1), "P^1 cut: chi != 1");
    s.check(todd_genus(p1, default_todd_order(p1)) == Rational(1), "P^1 cut: todd != 1");
    const std::vector<FixedPointDatum> p1xp1 = {
        FixedPointDatum::with_poly("a", {-1, 1}, Poly(1)),
        FixedPointDatum::with_poly("b", {1, -1}, Poly(1)),
        FixedPointDatum::with_poly("c", {-1, -1}, Poly(1)),
    };
    s.check(euler_characteristic(p1xp1) == Rational(2), "P^1 x P^1 cut: chi != 2");
    s.check(todd_genus(p1xp1, default_todd_order(p1xp1)) == Rational(1), "P^1 x P^1 cut: todd != 1");
    return std::move(s).done();
}

SuiteResult oracle_suite()
{
    Suite s("oracle");
    // Both sides are symmetric under permuting coordinates, so nondecreasing
    // weight tuples cover every weight vector.
    const Level zero(0, 1);
    for (std::size_t n = 1; n <= 5; ++n) {
        for_each_nondecreasing(n, -6, 6, [&](const std::vector<Weight>& ws) {
            const AmbientWeights w(ws);
            for (const auto& p : all_patterns(n)) {
                const auto pi = support_weights(p, w);
                const bool stable = is_stable(p, w, zero);
                s.check(invariant_monomial_exists(p, w, exact_degree_bound(p, w)) == stable,
                        "monomial oracle disagrees with criterion on " + w.to_string() + " " + p.to_string());
                const bool all_pos = *pi.begin() > 0;
                const bool all_neg = *pi.rbegin() < 0;
                for (unsigned d = 1; d <= 4; ++d) {
                    if (all_pos || all_neg)
                        s.check(a_invariant_sections_vanish(p, w, true, d),
                                "type ii' section survives on " + w.to_string() + " " + p.to_string());
                    if (all_neg)
                        s.check(a_invariant_sections_vanish(p, w, false, d),
                                "type iii' section survives on " + w.to_string() + " " + p.to_string());
                }
            }
        });
    }
    return std::move(s).done();
}

std::string read_file(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

std::vector<SuiteResult> run_property_suites(std::uint64_t seed)
{
    Rng rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(exact_arith_suite(rng));
    out.push_back(weight_model_suite(rng));
    out.push_back(cut_construction_suite(rng));
    out.push_back(localization_suite(rng));
    out.push_back(char_numbers_suite(rng));
    out.push_back(oracle_suite());
    return out;
}

SuiteResult check_golden_corpus(const std::filesystem::path& dir)
{
    Suite s("golden-corpus");
    const auto golden_dir = dir / "golden";
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_directory(golden_dir))
        for (const auto& entry : std::filesystem::directory_iterator(golden_dir))
            if (entry.path().extension() == ".txt")
                files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& g : files) {
        // <scenario>.<command>.txt
        const auto stem = g.stem().string();
        const auto dot = stem.rfind('.');
        if (dot == std::string::npos) {
            s.check(false, "malformed golden file name " + g.filename().string());
            continue;
        }
        const auto scenario_path = dir / (stem.substr(0, dot) + ".json");
        std::string actual;
        try {
            const auto cmd = parse_command(stem.substr(dot + 1));
            actual = run_command(cmd, load_scenario(scenario_path), {}).render(Format::text);
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what() + "\n";
        }
        s.check(actual == read_file(g), "golden mismatch: " + g.filename().string());
    }
    return std::move(s).done();
}

Report run_verify(const std::optional<std::filesystem::path>& corpus)
{
    Report r;
    r.add("command", std::string("verify"));
    auto suites = run_property_suites();
    if (corpus)
        suites.push_back(check_golden_corpus(*corpus));
    std::size_t failed = 0;
    for (const auto& s : suites) {
        r.add("suite " + s.name, std::string(s.passed() ? "pass" : "FAIL") + " (" + std::to_string(s.checks) +
                                     " checks, " + std::to_string(s.failures) + " failures)");
        if (!s.passed()) {
            r.add("first_failure " + s.name, s.first_failure);
            ++failed;
        }
    }
    r.add("suites_passed", std::to_string(suites.size() - failed) + "/" + std::to_string(suites.size()));
    r.property_failure = failed != 0;
    return r;
}

} // namespace algcut::app
