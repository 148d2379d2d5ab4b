#pragma once

/**
 * Integration-theoretic analysis of a rational function f in one variable:
 * Hermite reduction, the Rothstein-Trager residue resultant, residue
 * commensurability, and recognition of f as an exact derivative or as a
 * constant multiple of a logarithmic derivative.
 *
 * Residues are never represented numerically. They are described by the
 * squarefree polynomial S(t) whose roots they are; pairwise residue ratios by
 * W(u) = Res_t(S(t), S(u t)).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"

namespace liou {

/// f = poly_part + d(rat_part)/dvar + remainder.
struct HermiteParts {
    Poly poly_part;
    RatFunc rat_part;  ///< proper
    RatFunc remainder; ///< proper, squarefree denominator
};

HermiteParts hermite_reduce(const RatFunc& f);

/// Ceiling on deg S for the ratio polynomial (deg W = (deg S)^2).
inline constexpr std::size_t max_ratio_degree = 64;

/// Primitive squarefree part, positive leading coefficient, of
/// Res_y(num - t·den', den). Its roots are the distinct residues of h.
/// Requires h nonzero, proper, with squarefree denominator.
Poly rt_resultant(const RatFunc& h);

/// W(u) = Res_t(S(t), S(u·t)); roots are the ratios r_i / r_j of roots of S.
Poly ratio_poly(const Poly& s);

struct Commensurability {
    bool commensurable;
    std::vector<Rat> ratios; ///< distinct rational roots of W
    Poly ratio_poly{Var::u};
};

/// True iff every residue ratio is rational (W splits over Q).
Commensurability commensurable(const Poly& s);

/// A rational z with dz/dvar = f, or nullopt when none exists.
std::optional<RatFunc> has_rational_antiderivative(const RatFunc& f);

struct RationalResidue {
    Rat residue;
    Poly bound_factor; ///< gcd(den, num - residue·den'), the poles carrying it
};

struct ResidueCertificate {
    Poly rt_resultant{Var::t};
    Poly ratio_poly{Var::u};
    std::vector<RationalResidue> rational_residues;
    bool commensurable = false;
    std::optional<Rat> scale_a;
};

/// z'/(a·z) = h with a > 0 minimal such that every a·residue is an integer.
struct LogWitness {
    Rat a;
    RatFunc z;
};

/// Requires h proper with squarefree denominator and only rational residues
/// (otherwise throws nonrational_residue). The identity is checked before
/// returning.
LogWitness log_witness(const RatFunc& h);

/// Residues of h with their pole factors, when S(t) splits over Q.
std::optional<std::vector<RationalResidue>> rational_residues(const RatFunc& h, const Poly& s);

enum class LogDerivativeFailure { polynomial_part, nonsquarefree_denominator, incommensurable_residues };

std::string_view to_string(LogDerivativeFailure f) noexcept;

struct LogDerivativeVerdict {
    enum class Kind { no, yes_with_witness, yes_certificate_only };
    Kind kind = Kind::no;
    std::optional<LogDerivativeFailure> reason;
    std::string detail; ///< human-readable explanation of the failed conjunct
    std::optional<LogWitness> witness;
    std::optional<ResidueCertificate> certificate;
};

/// Decides whether f = z'/(a·z) for some z algebraic-coefficient rational
/// function and constant a != 0. Throws zero_input for f = 0.
LogDerivativeVerdict is_log_derivative_up_to_constant(const RatFunc& f);

} // namespace liou
