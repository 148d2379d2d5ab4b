#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liou {

enum class Errc {
    // algebra
    division_by_zero,
    variable_mismatch,
    zero_input,
    // reduction
    nonproper_input,
    nonsquarefree_denominator,
    zero_root_input,
    constant_input,
    nonrational_residue,
    // decision / verify
    malformed_witness,
    unsupported_tower_shape,
    malformed_extension,
    malformed_coefficients,
    // parser
    illegal_character,
    unexpected_token,
    wrong_variable,
    trailing_input,
    division_by_zero_expression,
    not_polynomial,
    // shared
    resource_limit,
    internal_inconsistency,
};

/// Coarse class of an error; the CLI maps these onto exit codes 1, 2 and 3.
enum class ErrorClass { usage, precondition, internal };

std::string_view errc_name(Errc code) noexcept;
ErrorClass error_class(Errc code) noexcept;
std::string_view to_string(ErrorClass c) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> offset = std::nullopt)
        : std::runtime_error(what), code_(code), offset_(offset) {}

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> offset() const noexcept { return offset_; }

private:
    Errc code_;
    std::optional<std::size_t> offset_;
};

} // namespace liou
