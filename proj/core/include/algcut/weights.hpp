#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "algcut/rational.hpp"

namespace algcut {

using Weight = std::int64_t;

/// Weights a_1..a_n of a one-dimensional torus on a basis of V; this fixes
/// the linearized action on P(V). Duplicates are allowed here and rejected
/// by operations that need isolated fixed points.
class AmbientWeights {
public:
    /// Throws PreconditionError if `weights` is empty.
    explicit AmbientWeights(std::vector<Weight> weights);

    std::size_t size() const { return weights_.size(); }
    /// Dimension of P(V).
    std::size_t dimension() const { return weights_.size() - 1; }
    Weight operator[](std::size_t i) const { return weights_[i]; }
    std::span<const Weight> values() const { return weights_; }

    bool has_duplicates() const;
    bool contains(Weight a) const;
    /// Throws PreconditionError naming `what` if weights repeat.
    void require_distinct(const char* what) const;

    std::string to_string() const; // "(0, 1, 2)"

    friend bool operator==(const AmbientWeights&, const AmbientWeights&) = default;

private:
    std::vector<Weight> weights_;
};

/// The set of nonzero coordinates of a point of P(V), as 0-based indices.
/// Stability only depends on this set, so points are never stored by
/// coordinates.
class SupportPattern {
public:
    /// Throws PreconditionError if empty. Indices are sorted and deduplicated.
    explicit SupportPattern(std::vector<std::size_t> indices);
    /// Bit i of `mask` selects index i. Throws PreconditionError if zero.
    static SupportPattern from_mask(std::uint64_t mask);

    std::span<const std::size_t> indices() const { return indices_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(std::size_t i) const;
    std::string to_string() const; // 1-based: "{1,3}"

    friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// Every support pattern for an n-dimensional V, in increasing mask order.
/// Throws PreconditionError for n > 62.
std::vector<SupportPattern> all_patterns(std::size_t n);

/// Cutting level q = a/n (exact rational).
class Level {
public:
    Level() = default;
    explicit Level(Rational q) : q_(std::move(q)) {}
    Level(std::int64_t num, std::int64_t den) : q_(num, den) {}

    const Rational& value() const { return q_; }
    std::string to_string() const { return q_.to_string(); }

    friend bool operator==(const Level&, const Level&) = default;

private:
    Rational q_;
};

/// Pi(x): the set of weights carried by the nonzero coordinates.
/// Throws PreconditionError if an index is out of range.
std::set<Weight> support_weights(const SupportPattern& p, const AmbientWeights& w);

/// True iff q is not one of the ambient weights.
bool is_regular_level(const AmbientWeights& w, const Level& q);

/// Pi(x) has a weight above q and a weight below q.
/// Throws PreconditionError if q is not a regular level.
bool is_stable(const SupportPattern& p, const AmbientWeights& w, const Level& q);

/// Pi(x) has a weight above q, i.e. x lies in X_{>q}.
bool is_in_upper(const SupportPattern& p, const AmbientWeights& w, const Level& q);

/// Weights n*a_i - a for q = a/n: cutting at q becomes cutting at 0.
/// Throws PreconditionError if a reweighted value overflows 64 bits.
AmbientWeights reweight(const AmbientWeights& w, const Level& q);

/// Order of the generic stabilizer of points with a given support; a
/// fixed point (|Pi(x)| == 1) has an infinite stabilizer.
class StabilizerOrder {
public:
    static StabilizerOrder infinite() { return StabilizerOrder(0); }
    static StabilizerOrder finite(std::int64_t order) { return StabilizerOrder(order); }

    bool is_infinite() const { return order_ == 0; }
    /// Only meaningful when finite.
    std::int64_t value() const { return order_; }
    std::string to_string() const { return is_infinite() ? "infinite" : std::to_string(order_); }

    friend bool operator==(const StabilizerOrder&, const StabilizerOrder&) = default;

private:
    explicit StabilizerOrder(std::int64_t order) : order_(order) {}
    std::int64_t order_;
};

StabilizerOrder stabilizer_order(const SupportPattern& p, const AmbientWeights& w);

/// True iff every pattern stable at level q has trivial stabilizer.
/// Throws PreconditionError for a non-regular level.
bool is_free_on_stable(const AmbientWeights& w, const Level& q);

/// A stable pattern with nontrivial stabilizer, if any (smallest mask first).
std::optional<SupportPattern> non_free_witness(const AmbientWeights& w, const Level& q);

} // namespace algcut
