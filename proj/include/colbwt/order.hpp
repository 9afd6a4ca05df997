#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace colbwt {

// Plain byte-wise lexicographic order; a proper prefix sorts first.
std::strong_ordering lex_compare(std::string_view s, std::string_view t) noexcept;

// Lexicographic order of the reversed strings, scanned right to left.
std::strong_ordering colex_compare(std::string_view s, std::string_view t) noexcept;

/// Omega order: compares the infinite powers s^w and t^w, and when those
/// coincide (s and t share a root) the string with the smaller exponent comes
/// first. Equal only for identical strings.
///
/// Uses the identity s^w < t^w <=> st < ts, so nothing is ever expanded
/// beyond |s| + |t| symbols.
std::strong_ordering omega_compare(std::string_view s, std::string_view t) noexcept;

struct RootDecomposition {
  std::string root;
  std::size_t exponent = 1;
};

// Smallest period of t that divides |t|, computed from the border array.
std::size_t primitive_root_length(std::string_view t);

RootDecomposition root_decompose(std::string_view t);

bool is_primitive(std::string_view t);

struct LyndonRotation {
  std::string rotation;
  std::size_t start = 1;  // 1-based position in the input where the rotation begins
};

// Lexicographically least conjugate of a primitive string. Throws
// Error(Errc::not_primitive) otherwise.
LyndonRotation lyndon_rotation(std::string_view t);

}  // namespace colbwt
