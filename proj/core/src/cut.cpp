#include "algcut/cut.hpp"

#include <algorithm>

#include "algcut/error.hpp"

namespace algcut {

namespace {

void require_no_zero_weight(const AmbientWeights& w, const char* what)
{
    if (w.contains(0))
        throw PreconditionError(std::string(what) + ": 0 is an ambient weight (reweight first)");
}

} // namespace

std::string_view to_string(InstabilityType t)
{
    switch (t) {
    case InstabilityType::stable: return "stable";
    case InstabilityType::type_i: return "type_i";
    case InstabilityType::type_ii: return "type_ii";
    case InstabilityType::type_iii: return "type_iii";
    case InstabilityType::type_ii_prime: return "type_ii_prime";
    case InstabilityType::type_iii_prime: return "type_iii_prime";
    }
    return "?";
}

std::string_view to_string(CutCoordinate z)
{
    switch (z) {
    case CutCoordinate::zero_section: return "zero_section";
    case CutCoordinate::infinity_section: return "infinity_section";
    case CutCoordinate::finite_nonzero: return "finite_nonzero";
    }
    return "?";
}

InstabilityType classify_cut_point(const SupportPattern& p, const AmbientWeights& w, CutCoordinate z)
{
    require_no_zero_weight(w, "classify_cut_point");
    const auto pi = support_weights(p, w);
    const bool has_pos = *pi.rbegin() > 0;
    const bool has_neg = *pi.begin() < 0;
    switch (z) {
    case CutCoordinate::infinity_section:
        return InstabilityType::type_i;
    case CutCoordinate::zero_section:
        return (has_pos && has_neg) ? InstabilityType::stable : InstabilityType::type_ii;
    case CutCoordinate::finite_nonzero:
        return has_pos ? InstabilityType::stable : InstabilityType::type_iii;
    }
    return InstabilityType::stable;
}

InstabilityType classify_affine_cut_point(const SupportPattern& p, const AmbientWeights& w,
                                          CutCoordinate z)
{
    if (z == CutCoordinate::infinity_section)
        throw PreconditionError("classify_affine_cut_point: z = [0:1] is not in X x A^1");
    switch (classify_cut_point(p, w, z)) {
    case InstabilityType::type_ii: return InstabilityType::type_ii_prime;
    case InstabilityType::type_iii: return InstabilityType::type_iii_prime;
    default: return InstabilityType::stable;
    }
}

CutInventory cut_fixed_inventory(const AmbientWeights& w, const Level& q)
{
    w.require_distinct("cut_fixed_inventory");
    if (!is_regular_level(w, q))
        throw PreconditionError("cut_fixed_inventory: level " + q.to_string() + " is an ambient weight");

    CutInventory inv;
    bool below = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (Rational(w[i]) < q.value()) {
            below = true;
            continue;
        }
        std::vector<Weight> tangent;
        for (std::size_t j = 0; j < w.size(); ++j)
            if (j != i)
                tangent.push_back(w[j] - w[i]);
        FixedPointDatum d;
        d.label = "e" + std::to_string(i + 1);
        d.tangent_weights = std::move(tangent);
        d.ambient_index = i;
        inv.upper_fixed.push_back(std::move(d));
    }
    inv.reduced_present = below && !inv.upper_fixed.empty();
    inv.reduced_normal_weight = 1;
    return inv;
}

PsiWeights psi_weight_check(const AmbientWeights& w, std::int64_t N)
{
    require_no_zero_weight(w, "psi_weight_check");
    const Weight max_a = *std::max_element(w.values().begin(), w.values().end());
    if (N <= max_a)
        throw PreconditionError("psi_weight_check: N = " + std::to_string(N) +
                                " must exceed every weight (max " + std::to_string(max_a) + ")");
    PsiWeights out;
    for (Weight a : w.values()) {
        out.diagonal_weights.push_back(a);
        out.antidiagonal_weights.push_back(a);
    }
    for (Weight a : w.values()) {
        out.diagonal_weights.push_back(a + N);
        out.antidiagonal_weights.push_back(a - N);
    }
    std::sort(out.diagonal_weights.begin(), out.diagonal_weights.end());
    std::sort(out.antidiagonal_weights.begin(), out.antidiagonal_weights.end());
    out.zero_free = !std::binary_search(out.antidiagonal_weights.begin(),
                                        out.antidiagonal_weights.end(), Weight{0});
    return out;
}

} // namespace algcut
