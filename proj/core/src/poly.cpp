#include "algcut/poly.hpp"

#include <ostream>

#include "algcut/error.hpp"

namespace algcut {

Poly::Poly(Rational constant)
{
    add_term(0, constant);
}

Poly Poly::monomial(const Rational& c, Exponent e)
{
    if (e < 0)
        throw PreconditionError("Poly::monomial: negative exponent");
    Poly p;
    p.add_term(e, c);
    return p;
}

std::optional<Poly::Exponent> Poly::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

std::optional<Poly::Exponent> Poly::low_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

Rational Poly::coefficient(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(Exponent e, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    Poly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

Poly Poly::pow(unsigned exponent) const
{
    Poly result(1);
    for (unsigned i = 0; i < exponent; ++i)
        result *= *this;
    return result;
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        first = false;
        if (e == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1))
            out += mag.to_string() + "*";
        out += "t";
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p)
{
    return os << p.to_string();
}

} // namespace algcut
