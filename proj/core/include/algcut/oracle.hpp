#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "algcut/weights.hpp"

namespace algcut {

/// Monomial prod x_i^{m_i} in S^d(V^*). The dual coordinate x_i has weight
/// -a_i, so the monomial has T-weight -sum m_i a_i.
class MonomialSection {
public:
    /// Throws PreconditionError for total degree 0 or an index out of range.
    MonomialSection(std::map<std::size_t, unsigned> exponents, const AmbientWeights& w);

    const std::map<std::size_t, unsigned>& exponents() const { return exponents_; }
    unsigned degree() const { return degree_; }
    Weight t_weight() const { return t_weight_; }
    /// Nonzero at every point with support p iff it only uses indices of p.
    bool nonvanishing_on(const SupportPattern& p) const;

private:
    std::map<std::size_t, unsigned> exponents_;
    unsigned degree_ = 0;
    Weight t_weight_ = 0;
};

/// Calls `visit` on every exponent vector over `n` slots with total degree
/// exactly `degree`; stops early when `visit` returns false.
void for_each_composition(std::size_t n, unsigned degree,
                          const std::function<bool(const std::vector<unsigned>&)>& visit);

/// Degree up to which a search for an invariant monomial supported on p is
/// conclusive: the largest degree of a two-variable invariant monomial
/// x_i^{b/g} x_j^{|a|/g} over straddling weight pairs a < 0 < b (1 if none).
unsigned exact_degree_bound(const SupportPattern& p, const AmbientWeights& w);

/// Is there a T-invariant monomial of degree 1..d_max using only
/// coordinates in p (hence nonvanishing at x)?
/// Throws PreconditionError if d_max < 1 or 0 is an ambient weight.
bool invariant_monomial_exists(const SupportPattern& p, const AmbientWeights& w, unsigned d_max);

/// For an unstable point of type (ii') (z_is_zero) or (iii') (z nonzero),
/// checks that every A-invariant basis section tau_l * w^l of degree d
/// (tau_l a monomial of T-weight -l, l >= 0) vanishes at (x, z).
/// Throws PreconditionError if the pattern is not of the claimed type.
bool a_invariant_sections_vanish(const SupportPattern& p, const AmbientWeights& w, bool z_is_zero,
                                 unsigned d);

} // namespace algcut
