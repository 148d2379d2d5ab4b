#pragma once

/**
 * Input language for polynomials and rational functions.
 *
 *   expr   := term (('+' | '-') term)*
 *   term   := unary (('*' | '/') unary)*
 *   unary  := '-' unary | factor
 *   factor := base ('^' integer)?
 *   base   := integer | variable | '(' expr ')'
 *
 * '^' takes a nonnegative integer literal and does not chain: "y^2^3" is
 * rejected. Rational constants are written as quotients ("3/2"). Exactly one
 * variable may appear, declared by the caller; there is no implicit
 * multiplication.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"

namespace liou {

enum class TokenKind { integer, identifier, plus, minus, star, slash, caret, lparen, rparen };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t offset; ///< byte offset into the input
};

/// Throws illegal_character with the offending offset.
std::vector<Token> tokenize(std::string_view input);

struct SyntaxNode {
    enum class Kind { number, variable, negate, add, sub, mul, div, pow };
    Kind kind;
    std::size_t offset;
    Int number;              ///< number
    std::string name;        ///< variable
    std::size_t exponent{};  ///< pow
    std::vector<SyntaxNode> children;
};

/// Largest accepted exponent literal.
inline constexpr std::size_t max_exponent = 1000;

/// Builds the syntax tree; `input_length` locates end-of-input errors.
SyntaxNode parse_tree(const std::vector<Token>& tokens, std::size_t input_length);

/// Parses and evaluates to a canonical rational function in `var`.
RatFunc parse(const std::vector<Token>& tokens, std::size_t input_length, Var var);
RatFunc parse(std::string_view input, Var var);

/// Parses a polynomial in y whose coefficients are rational functions of x.
/// Division is allowed only by y-free subexpressions.
PolyOverQx parse_poly_over_qx(std::string_view input);

} // namespace liou
