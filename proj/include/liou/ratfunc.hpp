#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liou/poly.hpp"

namespace liou {

/// Rational function num/den in canonical form: gcd(num, den) = 1 and den
/// monic. Zero is 0/1.
class RatFunc {
public:
    explicit RatFunc(Var var) : num_(var), den_(Poly::constant(var, 1)) {}
    explicit RatFunc(Poly num);
    /// Normalizing constructor; throws division_by_zero for a zero denominator.
    RatFunc(Poly num, Poly den);

    static RatFunc constant(Var var, const Rat& c) { return RatFunc(Poly::constant(var, c)); }
    static RatFunc variable(Var var) { return RatFunc(Poly::variable(var)); }

    Var var() const noexcept { return num_.var(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// deg num < deg den (zero counts as proper).
    bool is_proper() const noexcept;

    RatFunc inverse() const;
    RatFunc retagged(Var var) const { return RatFunc(num_.retagged(var), den_.retagged(var)); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& rhs);
    RatFunc& operator-=(const RatFunc& rhs);
    RatFunc& operator*=(const RatFunc& rhs);
    RatFunc& operator/=(const RatFunc& rhs);
    RatFunc& operator*=(const Rat& c);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend RatFunc operator*(RatFunc a, const Rat& c) { return a *= c; }
    friend RatFunc operator*(const Rat& c, RatFunc a) { return a *= c; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

private:
    struct canonical_tag {};
    RatFunc(Poly num, Poly den, canonical_tag) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Formal derivative with respect to the function's own variable.
RatFunc diff(const RatFunc& f);
RatFunc pow(const RatFunc& f, std::size_t n);
/// Integer power; negative exponents invert (zero base is a division error).
RatFunc pow(const RatFunc& f, long n);

struct ProperSplit {
    Poly poly_part;
    RatFunc proper;
};
ProperSplit proper_split(const RatFunc& f);

/// Polynomial in y with coefficients in Q(x); coeffs[k] multiplies y^k.
struct PolyOverQx {
    std::vector<RatFunc> coeffs;
};

/// f(g): substitutes g for the variable of f. Result carries g's variable.
RatFunc compose(const RatFunc& f, const RatFunc& g);

} // namespace liou
