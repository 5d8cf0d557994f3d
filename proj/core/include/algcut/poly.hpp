#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "algcut/rational.hpp"

namespace algcut {

/// Polynomial in the equivariant parameter t with rational coefficients.
/// Zero coefficients are never stored.
class Poly {
public:
    using Exponent = std::int64_t;

    Poly() = default;
    Poly(Rational constant); // NOLINT(google-explicit-constructor)
    Poly(std::int64_t constant) : Poly(Rational(constant)) {} // NOLINT(google-explicit-constructor)

    /// c * t^e. Throws PreconditionError for a negative exponent.
    static Poly monomial(const Rational& c, Exponent e);
    static Poly t() { return monomial(Rational(1), 1); }

    bool is_zero() const { return terms_.empty(); }
    /// Highest exponent with a nonzero coefficient; nullopt for the zero polynomial.
    std::optional<Exponent> degree() const;
    /// Lowest exponent with a nonzero coefficient; nullopt for zero.
    std::optional<Exponent> low_degree() const;
    Rational coefficient(Exponent e) const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    /// Single-term polynomial?
    bool is_monomial() const { return terms_.size() == 1; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly&, const Poly&) = default;

    Poly pow(unsigned exponent) const;

    /// Human-readable form, highest degree first: "2*t^2 - t + 1/3".
    std::string to_string() const;

private:
    void add_term(Exponent e, const Rational& c);

    std::map<Exponent, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace algcut
