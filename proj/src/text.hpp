#pragma once

// Internal helpers for the scalar text syntax.

#include <string>
#include <string_view>
#include <vector>

namespace orbitref::detail {

/// Strips whitespace and maps U+2212 (minus sign) to '-'.
std::string normalize_number_text(std::string_view text);

/// Splits "a+b-c" into signed terms {"a", "+b", "-c"}. A sign directly
/// after 'e'/'E' that follows a digit or '.' is treated as an exponent sign.
std::vector<std::string> split_signed_terms(const std::string& text);

}  // namespace orbitref::detail
