#pragma once

/**
 * Decision procedures for non-constant liouvillian solutions of first-order
 * equations over a constant field (algebraic closure of Q) and over Q(x).
 *
 *  - decide_autonomous: y' = R(y). Liouvillian iff 1/R equals dz/dy or
 *    (dz/dy)/(a·z) for some z in C(y) and constant a != 0.
 *  - decide_square: (y')^2 = P(y). No liouvillian solution when P is
 *    squarefree of degree >= 3; explicit tower witnesses for degree <= 2.
 *  - degree_bound_check: y' = P(y) over Q(x) has no solution in any iterated
 *    antiderivative tower (same constants) once deg P >= 3.
 *  - decide_abel: y' = a_n y^n + ... + a_2 y^2 + a_1 y over Q(x); every
 *    liouvillian solution (same constants) is algebraic over Q(x) when, after
 *    removing a_1 by the substitution y -> y/gamma, neither a_2 nor a_3 has a
 *    rational antiderivative.
 *
 * Every witness is checked with the verify module before it is returned;
 * a failing check raises internal_inconsistency.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"
#include "liou/reduction.hpp"
#include "liou/tower.hpp"
#include "liou/verify.hpp"

namespace liou {

enum class Status { liouvillian, not_liouvillian, algebraic_only, inconclusive, inapplicable, unsupported };

std::string_view to_string(Status s) noexcept;

struct FailureReason {
    std::string code;
    std::string detail;
};

struct AutonomousWitness {
    RatFunc z;
    std::optional<Rat> a; ///< log_derivative branch only
};

struct AutonomousVerdict {
    Status status = Status::not_liouvillian;
    Branch branch = Branch::none;
    std::optional<AutonomousWitness> witness;
    std::optional<ResidueCertificate> certificate;
    std::vector<FailureReason> failure_reasons;
};

AutonomousVerdict decide_autonomous(const RatFunc& r);

struct SquareVerdict {
    Status status = Status::inapplicable;
    std::optional<TowerWitness> witness;
    std::string reason; ///< degree_and_squarefree | explicit_construction | repeated_roots_or_low_degree_unhandled
};

SquareVerdict decide_square(const Poly& p);

enum class DegreeBound { no_solution_in_antiderivative_towers, inconclusive };

std::string_view to_string(DegreeBound d) noexcept;

DegreeBound degree_bound_check(const PolyOverQx& p);

struct GammaVerdict {
    enum class Kind { no, yes_rational_gamma, yes_algebraic_gamma };
    Kind kind = Kind::no;
    std::optional<RatFunc> gamma;       ///< yes_rational_gamma: gamma'/gamma = alpha
    std::optional<Poly> rt_resultant;   ///< residue polynomial, when computed
    std::vector<Rat> residues;          ///< rational residues, when they exist
    std::string detail;
};

std::string_view to_string(GammaVerdict::Kind k) noexcept;

/// Is alpha = gamma'/gamma for some gamma algebraic over Q(x)?
GammaVerdict log_derivative_of_algebraic(const RatFunc& alpha);

enum class Outcome { holds, fails, not_evaluated };

std::string_view to_string(Outcome o) noexcept;

struct HypothesisCheck {
    std::string hypothesis;
    Outcome outcome;
    std::string detail;
};

struct AbelVerdict {
    Status status = Status::inconclusive;
    std::optional<RatFunc> gamma;
    std::optional<std::vector<RatFunc>> scaled_coeffs;
    std::vector<HypothesisCheck> hypothesis_report;
    std::string part_I_fact;
    std::string part_II_fact;
};

/// coeffs = [a_1, ..., a_n] in Q(x), n >= 2.
AbelVerdict decide_abel(const std::vector<RatFunc>& coeffs);

} // namespace liou
