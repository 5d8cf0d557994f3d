#include "algcut/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "algcut/error.hpp"

namespace algcut {

MonomialSection::MonomialSection(std::map<std::size_t, unsigned> exponents, const AmbientWeights& w)
    : exponents_(std::move(exponents))
{
    for (auto it = exponents_.begin(); it != exponents_.end();) {
        if (it->first >= w.size())
            throw PreconditionError("MonomialSection: index out of range");
        if (it->second == 0) {
            it = exponents_.erase(it);
            continue;
        }
        degree_ += it->second;
        t_weight_ -= static_cast<Weight>(it->second) * w[it->first];
        ++it;
    }
    if (degree_ == 0)
        throw PreconditionError("MonomialSection: degree must be at least 1");
}

bool MonomialSection::nonvanishing_on(const SupportPattern& p) const
{
    return std::all_of(exponents_.begin(), exponents_.end(),
                       [&](const auto& e) { return p.contains(e.first); });
}

namespace {

bool compositions(std::vector<unsigned>& slots, std::size_t pos, unsigned remaining,
                  const std::function<bool(const std::vector<unsigned>&)>& visit)
{
    if (pos + 1 == slots.size()) {
        slots[pos] = remaining;
        return visit(slots);
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        slots[pos] = k;
        if (!compositions(slots, pos + 1, remaining - k, visit))
            return false;
    }
    slots[pos] = 0;
    return true;
}

} // namespace

void for_each_composition(std::size_t n, unsigned degree,
                          const std::function<bool(const std::vector<unsigned>&)>& visit)
{
    if (n == 0)
        return;
    std::vector<unsigned> slots(n, 0);
    compositions(slots, 0, degree, visit);
}

unsigned exact_degree_bound(const SupportPattern& p, const AmbientWeights& w)
{
    const auto pi = support_weights(p, w);
    unsigned bound = 1;
    for (Weight a : pi) {
        if (a >= 0)
            continue;
        for (Weight b : pi) {
            if (b <= 0)
                continue;
            const Weight g = std::gcd(-a, b);
            bound = std::max(bound, static_cast<unsigned>((b - a) / g));
        }
    }
    return bound;
}

bool invariant_monomial_exists(const SupportPattern& p, const AmbientWeights& w, unsigned d_max)
{
    if (d_max < 1)
        throw PreconditionError("invariant_monomial_exists: d_max must be at least 1");
    if (w.contains(0))
        throw PreconditionError("invariant_monomial_exists: 0 is an ambient weight");
    // Coordinates sharing a weight contribute identically, so enumerate over
    // the distinct weights of the support.
    const auto pi = support_weights(p, w);
    const std::vector<Weight> values(pi.begin(), pi.end());
    bool found = false;
    for (unsigned d = 1; d <= d_max && !found; ++d) {
        for_each_composition(values.size(), d, [&](const std::vector<unsigned>& m) {
            Weight s = 0;
            for (std::size_t k = 0; k < m.size(); ++k)
                s += static_cast<Weight>(m[k]) * values[k];
            found = (s == 0);
            return !found;
        });
    }
    return found;
}

bool a_invariant_sections_vanish(const SupportPattern& p, const AmbientWeights& w, bool z_is_zero,
                                 unsigned d)
{
    if (d < 1)
        throw PreconditionError("a_invariant_sections_vanish: degree must be at least 1");
    if (w.contains(0))
        throw PreconditionError("a_invariant_sections_vanish: 0 is an ambient weight");
    const auto pi = support_weights(p, w);
    const bool all_pos = *pi.begin() > 0;
    const bool all_neg = *pi.rbegin() < 0;
    if (z_is_zero && !(all_pos || all_neg))
        throw PreconditionError("a_invariant_sections_vanish: pattern " + p.to_string() +
                                " is stable on the zero section (not type ii')");
    if (!z_is_zero && !all_neg)
        throw PreconditionError("a_invariant_sections_vanish: pattern " + p.to_string() +
                                " has a positive weight (not type iii')");

    bool all_vanish = true;
    for_each_composition(w.size(), d, [&](const std::vector<unsigned>& m) {
        std::map<std::size_t, unsigned> exps;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0)
                exps.emplace(i, m[i]);
        const MonomialSection tau(std::move(exps), w);
        // tau has T-weight -l; it pairs with w^l, l >= 0. At w = 0 only l = 0 survives.
        const Weight l = -tau.t_weight();
        const bool relevant = z_is_zero ? (l == 0) : (l >= 0);
        if (relevant && tau.nonvanishing_on(p))
            all_vanish = false;
        return all_vanish;
    });
    return all_vanish;
}

} // namespace algcut
