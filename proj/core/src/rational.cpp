#include "algcut/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace algcut {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(std::int64_t n)
{
    value_ = mpq_class(mpz_class(static_cast<long>(n)));
}

Rational::Rational(std::int64_t n, std::int64_t d)
    : Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)))
{
}

Rational::Rational(mpz_class n, mpz_class d)
{
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(n, d);
    value_.canonicalize();
}

Rational::Rational(mpq_class q) : value_(std::move(q))
{
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num), mpz_class(1));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::inverse() const
{
    return Rational(1) / *this;
}

Rational Rational::pow(unsigned exponent) const
{
    Rational result(1);
    Rational base = *this;
    while (exponent != 0) {
        if (exponent & 1U)
            result *= base;
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f, mpz_class(1));
}

} // namespace algcut
