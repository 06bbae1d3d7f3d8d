#pragma once

#include <string_view>

namespace sdlab {

// Constant arithmetic for CLI flags: numbers, "pi", + - * /, unary sign,
// parentheses. "pi/4" and "1/2" stay exact relative to the ring
// circumference. Throws ConfigError on malformed input.
double parse_expression(std::string_view text);

}  // namespace sdlab
