#include "liou/errors.hpp"

namespace liou {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::variable_mismatch: return "variable_mismatch";
    case Errc::zero_input: return "zero_input";
    case Errc::nonproper_input: return "nonproper_input";
    case Errc::nonsquarefree_denominator: return "nonsquarefree_denominator";
    case Errc::zero_root_input: return "zero_root_input";
    case Errc::constant_input: return "constant_input";
    case Errc::nonrational_residue: return "nonrational_residue";
    case Errc::malformed_witness: return "malformed_witness";
    case Errc::unsupported_tower_shape: return "unsupported_tower_shape";
    case Errc::malformed_extension: return "malformed_extension";
    case Errc::malformed_coefficients: return "malformed_coefficients";
    case Errc::illegal_character: return "illegal_character";
    case Errc::unexpected_token: return "unexpected_token";
    case Errc::wrong_variable: return "wrong_variable";
    case Errc::trailing_input: return "trailing_input";
    case Errc::division_by_zero_expression: return "division_by_zero_expression";
    case Errc::not_polynomial: return "not_polynomial";
    case Errc::resource_limit: return "resource_limit";
    case Errc::internal_inconsistency: return "internal_inconsistency";
    }
    return "unknown";
}

ErrorClass error_class(Errc code) noexcept
{
    switch (code) {
    case Errc::illegal_character:
    case Errc::unexpected_token:
    case Errc::wrong_variable:
    case Errc::trailing_input:
    case Errc::division_by_zero_expression:
    case Errc::not_polynomial:
    case Errc::malformed_coefficients:
        return ErrorClass::usage;
    case Errc::internal_inconsistency:
        return ErrorClass::internal;
    default:
        return ErrorClass::precondition;
    }
}

std::string_view to_string(ErrorClass c) noexcept
{
    switch (c) {
    case ErrorClass::usage: return "usage";
    case ErrorClass::precondition: return "precondition";
    case ErrorClass::internal: return "internal";
    }
    return "internal";
}

} // namespace liou
