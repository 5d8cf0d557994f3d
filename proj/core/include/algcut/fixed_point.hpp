#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algcut/laurent.hpp"
#include "algcut/poly.hpp"
#include "algcut/weights.hpp"

namespace algcut {

/// Isolated fixed point p with tangent weights alpha_i(p) and the restriction
/// of some equivariant class to p (a series in t; the unit class by default).
struct FixedPointDatum {
    std::string label;
    std::vector<Weight> tangent_weights;
    LaurentSeries restriction = LaurentSeries::from_poly(Poly(1), 1);
    /// Coordinate index e_i when the point comes from P(V).
    std::optional<std::size_t> ambient_index;

    /// Datum whose restriction is an exact polynomial. The stored truncation
    /// is wide enough that dividing by the Euler class keeps t^-1 in window.
    /// Throws PreconditionError on an empty or zero tangent weight list.
    static FixedPointDatum with_poly(std::string label, std::vector<Weight> tangent_weights,
                                     const Poly& restriction);

    std::size_t dimension() const { return tangent_weights.size(); }
    /// Throws PreconditionError if empty or some weight is zero.
    void validate() const;
};

} // namespace algcut
