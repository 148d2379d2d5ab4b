#pragma once

// Explicit liouvillian witnesses over a one-generator tower Q(λ)(g), where g
// is either an antiderivative (g' = 1) or an exponential (g' = rate·g), and λ
// optionally adjoins a square root: λ² = square.

#include <optional>
#include <string>
#include <vector>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"

namespace liou {

enum class GeneratorKind { antiderivative, exponential };

std::string_view to_string(GeneratorKind k) noexcept;

/// re + im·λ.
struct QuadConst {
    Rat re;
    Rat im;
};

struct Generator {
    std::string name;
    GeneratorKind kind;
    Var var;
    QuadConst rate{1, 0}; ///< exponential only: g' = rate·g
};

struct QuadExtension {
    std::string symbol = "lambda";
    Rat square;
};

/// re + im·λ with re, im in Q(g).
struct QuadRatFunc {
    RatFunc re;
    RatFunc im;
};

struct TowerWitness {
    std::vector<Generator> generators;
    std::optional<QuadExtension> quad_ext;
    QuadRatFunc expression; ///< the solution y
    std::string claimed_relation;
};

std::string to_string(const QuadConst& c, const std::string& symbol = "lambda");
std::string to_string(const QuadRatFunc& e, const std::string& symbol = "lambda");
/// "t' = 1", "v' = lambda*v", "v' = 2*v", ...
std::string derivation_rule(const Generator& g, const std::string& symbol = "lambda");

} // namespace liou
