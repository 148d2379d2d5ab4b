#include "liou/ratfunc.hpp"

#include <utility>

#include "liou/errors.hpp"

namespace liou {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.var(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_.var() != den_.var())
        throw Error(Errc::variable_mismatch, "numerator and denominator use different variables");
    if (den_.is_zero())
        throw Error(Errc::division_by_zero, "rational function with a zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.var(), 1);
        return;
    }
    if (!den_.is_constant()) {
        const Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    const Rat lead = den_.lc();
    if (lead != 1) {
        const Rat inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

bool RatFunc::is_proper() const noexcept
{
    return num_.is_zero() || *num_.degree() < *den_.degree();
}

RatFunc RatFunc::inverse() const
{
    if (is_zero())
        throw Error(Errc::division_by_zero, "inverse of the zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const
{
    return RatFunc(-num_, den_, canonical_tag{});
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs)
{
    if (den_ == rhs.den_)
        *this = RatFunc(num_ + rhs.num_, den_);
    else
        *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs)
{
    return *this += -rhs;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs)
{
    *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs)
{
    if (rhs.is_zero())
        throw Error(Errc::division_by_zero, "division by the zero rational function");
    *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
    return *this;
}

RatFunc& RatFunc::operator*=(const Rat& c)
{
    if (sgn(c) == 0)
        *this = RatFunc(var());
    else
        num_ *= c;
    return *this;
}

RatFunc diff(const RatFunc& f)
{
    return RatFunc(diff(f.num()) * f.den() - f.num() * diff(f.den()), f.den() * f.den());
}

RatFunc pow(const RatFunc& f, std::size_t n)
{
    return RatFunc(pow(f.num(), n), pow(f.den(), n));
}

RatFunc pow(const RatFunc& f, long n)
{
    if (n >= 0)
        return pow(f, static_cast<std::size_t>(n));
    return pow(f.inverse(), static_cast<std::size_t>(-n));
}

ProperSplit proper_split(const RatFunc& f)
{
    auto [q, r] = divrem(f.num(), f.den());
    return {std::move(q), RatFunc(std::move(r), f.den())};
}

namespace {

RatFunc eval_poly(const Poly& p, const RatFunc& g)
{
    RatFunc acc(g.var());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * g + RatFunc::constant(g.var(), *it);
    return acc;
}

} // namespace

RatFunc compose(const RatFunc& f, const RatFunc& g)
{
    return eval_poly(f.num(), g) / eval_poly(f.den(), g);
}

} // namespace liou
