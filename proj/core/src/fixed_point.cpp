#include "algcut/fixed_point.hpp"

#include <algorithm>

#include "algcut/error.hpp"

namespace algcut {

FixedPointDatum FixedPointDatum::with_poly(std::string label, std::vector<Weight> tangent_weights,
                                           const Poly& restriction)
{
    FixedPointDatum d;
    d.label = std::move(label);
    d.tangent_weights = std::move(tangent_weights);
    d.validate();
    const auto dim = static_cast<LaurentSeries::Exponent>(d.tangent_weights.size());
    const auto deg = restriction.degree().value_or(0);
    d.restriction = LaurentSeries::from_poly(restriction, std::max(deg + 1, dim));
    return d;
}

void FixedPointDatum::validate() const
{
    if (tangent_weights.empty())
        throw PreconditionError("fixed point '" + label + "' has no tangent weights");
    if (std::find(tangent_weights.begin(), tangent_weights.end(), 0) != tangent_weights.end())
        throw PreconditionError("fixed point '" + label + "' has a zero tangent weight");
}

} // namespace algcut
