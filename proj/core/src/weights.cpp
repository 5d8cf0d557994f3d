#include "algcut/weights.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "algcut/error.hpp"

namespace algcut {

AmbientWeights::AmbientWeights(std::vector<Weight> weights) : weights_(std::move(weights))
{
    if (weights_.empty())
        throw PreconditionError("AmbientWeights: weight list must be nonempty");
}

bool AmbientWeights::has_duplicates() const
{
    std::vector<Weight> sorted = weights_;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

bool AmbientWeights::contains(Weight a) const
{
    return std::find(weights_.begin(), weights_.end(), a) != weights_.end();
}

void AmbientWeights::require_distinct(const char* what) const
{
    if (has_duplicates())
        throw PreconditionError(std::string(what) +
                                ": repeated weights give positive-dimensional fixed components");
}

std::string AmbientWeights::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i != 0)
            out += ", ";
        out += std::to_string(weights_[i]);
    }
    return out + ")";
}

SupportPattern::SupportPattern(std::vector<std::size_t> indices) : indices_(std::move(indices))
{
    if (indices_.empty())
        throw PreconditionError("SupportPattern: a point has at least one nonzero coordinate");
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

SupportPattern SupportPattern::from_mask(std::uint64_t mask)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 64; ++i)
        if (mask & (std::uint64_t{1} << i))
            idx.push_back(i);
    return SupportPattern(std::move(idx));
}

bool SupportPattern::contains(std::size_t i) const
{
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::string SupportPattern::to_string() const
{
    std::string out = "{";
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (k != 0)
            out += ",";
        out += std::to_string(indices_[k] + 1);
    }
    return out + "}";
}

std::vector<SupportPattern> all_patterns(std::size_t n)
{
    if (n > 62)
        throw PreconditionError("all_patterns: too many coordinates to enumerate");
    std::vector<SupportPattern> out;
    out.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
        out.push_back(SupportPattern::from_mask(mask));
    return out;
}

std::set<Weight> support_weights(const SupportPattern& p, const AmbientWeights& w)
{
    std::set<Weight> out;
    for (std::size_t i : p.indices()) {
        if (i >= w.size())
            throw PreconditionError("support_weights: index " + std::to_string(i + 1) +
                                    " out of range for " + std::to_string(w.size()) + " weights");
        out.insert(w[i]);
    }
    return out;
}

bool is_regular_level(const AmbientWeights& w, const Level& q)
{
    return std::none_of(w.values().begin(), w.values().end(),
                        [&](Weight a) { return Rational(a) == q.value(); });
}

bool is_in_upper(const SupportPattern& p, const AmbientWeights& w, const Level& q)
{
    const auto pi = support_weights(p, w);
    return Rational(*pi.rbegin()) > q.value();
}

bool is_stable(const SupportPattern& p, const AmbientWeights& w, const Level& q)
{
    if (!is_regular_level(w, q))
        throw PreconditionError("is_stable: level " + q.to_string() + " is an ambient weight");
    const auto pi = support_weights(p, w);
    return Rational(*pi.begin()) < q.value() && Rational(*pi.rbegin()) > q.value();
}

AmbientWeights reweight(const AmbientWeights& w, const Level& q)
{
    const mpz_class a = q.value().numerator();
    const mpz_class n = q.value().denominator();
    std::vector<Weight> out;
    out.reserve(w.size());
    for (Weight ai : w.values()) {
        mpz_class v = n * mpz_class(static_cast<long>(ai)) - a;
        if (!v.fits_slong_p())
            throw PreconditionError("reweight: weight overflows 64 bits");
        out.push_back(v.get_si());
    }
    return AmbientWeights(std::move(out));
}

StabilizerOrder stabilizer_order(const SupportPattern& p, const AmbientWeights& w)
{
    const auto pi = support_weights(p, w);
    if (pi.size() == 1)
        return StabilizerOrder::infinite();
    // gcd of all pairwise differences = gcd of differences to the minimum.
    const Weight base = *pi.begin();
    std::int64_t g = 0;
    for (Weight a : pi)
        g = std::gcd(g, a - base);
    return StabilizerOrder::finite(g);
}

std::optional<SupportPattern> non_free_witness(const AmbientWeights& w, const Level& q)
{
    if (!is_regular_level(w, q))
        throw PreconditionError("is_free_on_stable: level " + q.to_string() + " is an ambient weight");
    for (const auto& p : all_patterns(w.size())) {
        if (!is_stable(p, w, q))
            continue;
        if (stabilizer_order(p, w).value() != 1)
            return p;
    }
    return std::nullopt;
}

bool is_free_on_stable(const AmbientWeights& w, const Level& q)
{
    return !non_free_witness(w, q).has_value();
}

} // namespace algcut
