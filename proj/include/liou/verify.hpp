#pragma once

// Substitution checks for emitted witnesses. Only algebra-level arithmetic is
// used here, never the reduction code that produced the witness.

#include <optional>
#include <string>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"
#include "liou/tower.hpp"

namespace liou {

enum class Branch { antiderivative, log_derivative, none };

std::string_view to_string(Branch b) noexcept;

struct VerificationReport {
    std::string identity;
    bool passed = false;
    std::string residual; ///< exact lhs - rhs; "0" when passed
};

/// antiderivative: R·dz/dy = 1; log_derivative: R·dz/dy = a·z. A constant z
/// is rejected as malformed.
VerificationReport verify_autonomous_witness(const RatFunc& r, Branch branch, const RatFunc& z,
                                             const std::optional<Rat>& a);

/// (y')² = P(y) with y' computed by the generator's derivation rule and λ²
/// reduced to the declared square. Constant expressions are rejected as
/// malformed: they can only be equilibria, never the solutions in question.
VerificationReport verify_square_witness(const Poly& p, const TowerWitness& w);

/// (f·g)' = f'·g + f·g'.
VerificationReport check_leibniz(const RatFunc& f, const RatFunc& g);

} // namespace liou
