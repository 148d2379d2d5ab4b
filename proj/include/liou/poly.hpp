#pragma once

/**
 * Dense univariate polynomials over Q.
 *
 * Coefficients are stored low degree first with the top entry nonzero; the
 * zero polynomial is the empty sequence and has no degree (degree() returns
 * nullopt). Every polynomial carries a variable tag and binary operations
 * refuse to mix tags.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace liou {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact square root of a rational, when it exists.
std::optional<Rat> rational_sqrt(const Rat& r);

/// Role of a polynomial's variable: dependent y, independent x, residue t,
/// residue ratio u, or the exponential tower generator v.
enum class Var : std::uint8_t { y, x, t, u, v };

std::string_view var_name(Var v) noexcept;

class Poly {
public:
    explicit Poly(Var var) : var_(var) {}
    Poly(Var var, std::vector<Rat> coeffs);

    static Poly constant(Var var, const Rat& c);
    static Poly monomial(Var var, const Rat& c, std::size_t exponent);
    static Poly variable(Var var) { return monomial(var, 1, 1); }

    Var var() const noexcept { return var_; }
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Degree of a nonzero polynomial; throws zero_input on zero.
    std::size_t deg() const;

    /// Coefficient of var^k (zero past the top).
    Rat coeff(std::size_t k) const;
    /// Leading coefficient, 0 for the zero polynomial.
    Rat lc() const;

    Rat eval(const Rat& at) const;

    Poly monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    Poly primitive() const;
    /// Same polynomial with a different variable tag.
    Poly retagged(Var var) const { return Poly(var, coeffs_); }

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator*(const Rat& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void trim();
    void require_same_var(const Poly& other) const;

    Var var_;
    std::vector<Rat> coeffs_;
};

struct DivRem {
    Poly quotient;
    Poly remainder;
};

DivRem divrem(const Poly& a, const Poly& b);
/// a / b where b is known to divide a; a nonzero remainder is an internal error.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic gcd via the subresultant remainder sequence.
Poly gcd(const Poly& a, const Poly& b);

struct Bezout {
    Poly s;
    Poly t;
};
/// s·a + t·b = c with deg s < deg b; requires gcd(a, b) = 1.
Bezout solve_diophantine(const Poly& a, const Poly& b, const Poly& c);

Poly diff(const Poly& p);
/// Antiderivative with zero constant term.
Poly integrate(const Poly& p);
Poly pow(const Poly& p, std::size_t n);

bool is_squarefree(const Poly& p);

struct SquarefreeFactor {
    Poly factor;
    std::size_t multiplicity;
};
struct SquarefreeDecomposition {
    Rat leading;
    std::vector<SquarefreeFactor> factors; ///< increasing multiplicity
};
/// Yun's algorithm; factors are monic, squarefree and pairwise coprime.
SquarefreeDecomposition squarefree_decompose(const Poly& p);
/// Product of the distinct monic irreducible factors (p / gcd(p, p')), monic.
Poly squarefree_part(const Poly& p);

/// Sylvester resultant Res(a, b) for univariate a, b (Collins' subresultant
/// algorithm; sign as the Sylvester determinant with a's rows first).
Rat resultant(const Poly& a, const Poly& b);

/// Polynomial in `main` whose coefficients are polynomials in `param`.
struct BiPoly {
    Var main;
    Var param;
    std::vector<Poly> coeffs; ///< coeffs[k] multiplies main^k

    static BiPoly lift(const Poly& p, Var param); ///< constant coefficients
};

/// Resultant eliminating the main variable; the result is a polynomial in
/// the shared parameter variable.
Poly resultant(const BiPoly& a, const BiPoly& b);

struct RationalRoot {
    Rat root;
    std::size_t multiplicity;
};
struct RationalRoots {
    std::vector<RationalRoot> roots; ///< increasing order
    Poly nonsplit_remainder;         ///< no rational roots
};

/// Candidate-count ceiling for divisor enumeration.
inline constexpr std::size_t max_root_candidates = 1'000'000;

/// All rational roots by divisor enumeration on the primitive integer form.
/// Throws resource_limit rather than truncating the search.
RationalRoots rational_roots(const Poly& p);
/// Rational roots of p drawn from `candidates`, which must contain every
/// rational root for the remainder to be root-free.
RationalRoots rational_roots_among(const Poly& p, const std::vector<Rat>& candidates);

/// Every rational number that can equal r_i / r_j for roots r_i, r_j of s.
/// At each prime the valuation of such a ratio is a difference of root
/// valuations, which the Newton polygon of s gives exactly. Requires s
/// nonconstant with s(0) != 0.
std::vector<Rat> root_ratio_candidates(const Poly& s);

} // namespace liou
