#pragma once

#include <string>

#include "liou/poly.hpp"
#include "liou/ratfunc.hpp"

namespace liou {

// Printers emit the CLI's input language, so every rendering parses back to
// the same canonical value.

std::string to_string(const Rat& r);
/// Descending powers, e.g. "3/2*y^2 - y + 1".
std::string to_string(const Poly& p);
/// "num/den" with parentheses around multi-term parts, e.g. "y/(y + 1)".
std::string to_string(const RatFunc& f);

} // namespace liou
