#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algcut/cut.hpp"
#include "algcut/fixed_point.hpp"
#include "algcut/laurent.hpp"
#include "algcut/poly.hpp"
#include "algcut/weights.hpp"

namespace algcut {

/// Element of the equivariant Chow ring of P(V),
///
///     Q[h, t] / prod_i (h + a_i t),
///
/// where h is the equivariant hyperplane class. The hyperplane class restricts
/// to the fixed point e_i as -a_i t (a weight-a line has first Chern class
/// a t, and O(1) at e_i is dual to a weight-a_i line). Representatives are
/// kept reduced: every stored h-degree is below |w|.
class EquivariantClass {
public:
    /// (h-degree, t-degree)
    using Monomial = std::pair<unsigned, unsigned>;

    explicit EquivariantClass(AmbientWeights w);
    EquivariantClass(AmbientWeights w, const Rational& constant);

    static EquivariantClass h(const AmbientWeights& w);
    static EquivariantClass t(const AmbientWeights& w);
    /// c * h^hd * t^td, reduced.
    static EquivariantClass monomial(const AmbientWeights& w, const Rational& c, unsigned hd, unsigned td);

    const AmbientWeights& weights() const { return weights_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Part of total degree k (h and t both have degree 1).
    EquivariantClass homogeneous_part(unsigned k) const;
    /// Zero counts as homogeneous of every degree.
    bool is_homogeneous(unsigned k) const;
    /// Highest total degree present (0 for the zero class).
    unsigned max_degree() const;

    EquivariantClass operator-() const;
    EquivariantClass& operator+=(const EquivariantClass& o);
    EquivariantClass& operator-=(const EquivariantClass& o);
    /// Throws PreconditionError if the ambient weights differ.
    EquivariantClass& operator*=(const EquivariantClass& o);
    EquivariantClass& operator*=(const Rational& c);

    friend EquivariantClass operator+(EquivariantClass a, const EquivariantClass& b) { return a += b; }
    friend EquivariantClass operator-(EquivariantClass a, const EquivariantClass& b) { return a -= b; }
    friend EquivariantClass operator*(EquivariantClass a, const EquivariantClass& b) { return a *= b; }
    friend EquivariantClass operator*(EquivariantClass a, const Rational& c) { return a *= c; }
    friend EquivariantClass operator*(const Rational& c, EquivariantClass a) { return a *= c; }
    friend bool operator==(const EquivariantClass&, const EquivariantClass&) = default;

    EquivariantClass pow(unsigned e) const;

    std::string to_string() const; // "2*h^2 - h*t + 1/3*t^2"

private:
    void add_term(Monomial m, const Rational& c);
    void reduce();
    void require_same_ring(const EquivariantClass& o) const;

    AmbientWeights weights_;
    std::map<Monomial, Rational> terms_;
};

/// Substitutes h -> -a_i t. Throws PreconditionError for repeated weights
/// or an out-of-range index (0-based).
Poly restrict_at_fixed_point(const EquivariantClass& c, std::size_t i);

/// Total equivariant Chern class prod_j (1 + h + a_j t) of T P(V).
EquivariantClass tangent_chern_class(const AmbientWeights& w);

/// Top Chern class of the tangent space at an isolated fixed point:
/// t^d prod alpha_i. Throws PreconditionError on a zero weight.
Poly euler_class(std::span<const Weight> tangent_weights);

/// restriction / euler_class as a Laurent series (exact division by a monomial).
LaurentSeries localized_term(const FixedPointDatum& p);

/// -sum_p Res_{t=0} restriction_p / e(p) over the fixed points above the level.
Rational kalkman_integral(std::span<const FixedPointDatum> upper);

struct KalkmanResult {
    Rational value;
    /// False when nothing is stable at the level, so the quotient is empty.
    bool reduced_present = false;
};

/// Kalkman's formula on P(V): builds the fixed points above q, restricts c to
/// them and evaluates. c must be homogeneous of degree dim P(V) - 1.
KalkmanResult kalkman_from_class(const AmbientWeights& w, const Level& q, const EquivariantClass& c);

/// Sum of localized residues over every fixed point of P(V); zero whenever
/// c has degree dim P(V) - 1.
Rational total_residue(const AmbientWeights& w, const EquivariantClass& c);

/// t^0 coefficient.
Rational constant_term_reduction(const Poly& s);

} // namespace algcut
