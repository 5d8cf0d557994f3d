#include "algcut/localization.hpp"

#include <algorithm>

#include "algcut/error.hpp"

namespace algcut {

namespace {

// Elementary symmetric polynomials e_0..e_n of the weights.
std::vector<Rational> elementary_symmetric(const AmbientWeights& w)
{
    std::vector<Rational> e(w.size() + 1);
    e[0] = Rational(1);
    for (Weight a : w.values())
        for (std::size_t k = w.size(); k >= 1; --k)
            e[k] += e[k - 1] * Rational(a);
    return e;
}

std::string render_monomial(unsigned hd, unsigned td)
{
    std::string out;
    auto var = [&](const char* name, unsigned d) {
        if (d == 0)
            return;
        if (!out.empty())
            out += "*";
        out += name;
        if (d != 1)
            out += "^" + std::to_string(d);
    };
    var("h", hd);
    var("t", td);
    return out;
}

} // namespace

EquivariantClass::EquivariantClass(AmbientWeights w) : weights_(std::move(w)) {}

EquivariantClass::EquivariantClass(AmbientWeights w, const Rational& constant) : weights_(std::move(w))
{
    add_term({0, 0}, constant);
}

EquivariantClass EquivariantClass::h(const AmbientWeights& w)
{
    return monomial(w, Rational(1), 1, 0);
}

EquivariantClass EquivariantClass::t(const AmbientWeights& w)
{
    return monomial(w, Rational(1), 0, 1);
}

EquivariantClass EquivariantClass::monomial(const AmbientWeights& w, const Rational& c, unsigned hd,
                                            unsigned td)
{
    EquivariantClass r(w);
    r.add_term({hd, td}, c);
    r.reduce();
    return r;
}

void EquivariantClass::add_term(Monomial m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void EquivariantClass::reduce()
{
    const auto n = static_cast<unsigned>(weights_.size());
    auto top = [&] {
        unsigned best = 0;
        for (const auto& [m, c] : terms_)
            best = std::max(best, m.first);
        return best;
    };
    if (top() < n)
        return;
    const auto e = elementary_symmetric(weights_);
    // h^n = -sum_{k<n} e_{n-k} t^{n-k} h^k
    for (unsigned hd = top(); hd >= n; hd = top()) {
        std::vector<std::pair<Monomial, Rational>> high;
        for (const auto& [m, c] : terms_)
            if (m.first == hd)
                high.emplace_back(m, c);
        for (const auto& [m, c] : high) {
            terms_.erase(m);
            for (unsigned k = 0; k < n; ++k)
                add_term({m.first - n + k, m.second + (n - k)}, -c * e[n - k]);
        }
    }
}

void EquivariantClass::require_same_ring(const EquivariantClass& o) const
{
    if (!(weights_ == o.weights_))
        throw PreconditionError("EquivariantClass: operands live over different weight vectors");
}

EquivariantClass EquivariantClass::homogeneous_part(unsigned k) const
{
    EquivariantClass r(weights_);
    for (const auto& [m, c] : terms_)
        if (m.first + m.second == k)
            r.terms_.emplace(m, c);
    return r;
}

bool EquivariantClass::is_homogeneous(unsigned k) const
{
    for (const auto& [m, c] : terms_)
        if (m.first + m.second != k)
            return false;
    return true;
}

unsigned EquivariantClass::max_degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.first + m.second);
    return d;
}

EquivariantClass EquivariantClass::operator-() const
{
    EquivariantClass r = *this;
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

EquivariantClass& EquivariantClass::operator+=(const EquivariantClass& o)
{
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

EquivariantClass& EquivariantClass::operator-=(const EquivariantClass& o)
{
    require_same_ring(o);
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

EquivariantClass& EquivariantClass::operator*=(const EquivariantClass& o)
{
    require_same_ring(o);
    EquivariantClass r(weights_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_)
            r.add_term({m1.first + m2.first, m1.second + m2.second}, c1 * c2);
    r.reduce();
    terms_ = std::move(r.terms_);
    return *this;
}

EquivariantClass& EquivariantClass::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

EquivariantClass EquivariantClass::pow(unsigned e) const
{
    EquivariantClass r(weights_, Rational(1));
    for (unsigned i = 0; i < e; ++i)
        r *= *this;
    return r;
}

std::string EquivariantClass::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest total degree first, then highest h-degree.
    std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        const unsigned dx = x.first.first + x.first.second;
        const unsigned dy = y.first.first + y.first.second;
        if (dx != dy)
            return dx > dy;
        return x.first.first > y.first.first;
    });
    for (const auto& [m, c] : ordered) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        const std::string mono = render_monomial(m.first, m.second);
        if (mono.empty())
            out += mag.to_string();
        else if (mag == Rational(1))
            out += mono;
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

Poly restrict_at_fixed_point(const EquivariantClass& c, std::size_t i)
{
    const auto& w = c.weights();
    w.require_distinct("restrict_at_fixed_point");
    if (i >= w.size())
        throw PreconditionError("restrict_at_fixed_point: index out of range");
    const Rational h_value = Rational(-w[i]);
    Poly out;
    for (const auto& [m, coeff] : c.terms())
        out += Poly::monomial(coeff * h_value.pow(m.first), m.first + m.second);
    return out;
}

EquivariantClass tangent_chern_class(const AmbientWeights& w)
{
    w.require_distinct("tangent_chern_class");
    EquivariantClass total(w, Rational(1));
    for (Weight a : w.values())
        total *= EquivariantClass(w, Rational(1)) + EquivariantClass::h(w) +
                 EquivariantClass::monomial(w, Rational(a), 0, 1);
    return total;
}

Poly euler_class(std::span<const Weight> tangent_weights)
{
    Rational prod(1);
    for (Weight a : tangent_weights) {
        if (a == 0)
            throw PreconditionError("euler_class: zero tangent weight (fixed point is not isolated)");
        prod *= Rational(a);
    }
    return Poly::monomial(prod, static_cast<Poly::Exponent>(tangent_weights.size()));
}

LaurentSeries localized_term(const FixedPointDatum& p)
{
    p.validate();
    const Poly e = euler_class(p.tangent_weights);
    const auto d = *e.degree();
    return p.restriction.shifted(-d) * e.coefficient(d).inverse();
}

Rational kalkman_integral(std::span<const FixedPointDatum> upper)
{
    Rational sum;
    for (const auto& p : upper)
        sum += residue(localized_term(p));
    return -sum;
}

namespace {

void require_top_minus_one(const AmbientWeights& w, const EquivariantClass& c, const char* what)
{
    if (!(c.weights() == w))
        throw PreconditionError(std::string(what) + ": class lives over different weights");
    const auto target = static_cast<unsigned>(w.dimension()) - 1;
    if (w.dimension() == 0 || !c.is_homogeneous(target))
        throw PreconditionError(std::string(what) + ": class must be homogeneous of degree dim P(V) - 1 = " +
                                std::to_string(static_cast<long>(w.dimension()) - 1));
}

} // namespace

KalkmanResult kalkman_from_class(const AmbientWeights& w, const Level& q, const EquivariantClass& c)
{
    w.require_distinct("kalkman_from_class");
    require_top_minus_one(w, c, "kalkman_from_class");
    CutInventory inv = cut_fixed_inventory(w, q);
    for (auto& p : inv.upper_fixed) {
        const auto index = *p.ambient_index;
        p = FixedPointDatum::with_poly(p.label, p.tangent_weights, restrict_at_fixed_point(c, index));
        p.ambient_index = index;
    }
    return {kalkman_integral(inv.upper_fixed), inv.reduced_present};
}

Rational total_residue(const AmbientWeights& w, const EquivariantClass& c)
{
    w.require_distinct("total_residue");
    require_top_minus_one(w, c, "total_residue");
    Rational sum;
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::vector<Weight> tangent;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i)
                tangent.push_back(w[j] - w[i]);
        auto p = FixedPointDatum::with_poly("e" + std::to_string(i + 1), std::move(tangent),
                                            restrict_at_fixed_point(c, i));
        sum += residue(localized_term(p));
    }
    return sum;
}

Rational constant_term_reduction(const Poly& s)
{
    return s.coefficient(0);
}

} // namespace algcut
