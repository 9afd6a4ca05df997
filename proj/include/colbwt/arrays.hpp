#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"

namespace colbwt {

// Integer symbol used when sentinels must be told apart (distinct dollars)
// or when working over meta-alphabets.
using Symbol = std::uint32_t;

// A (string index, position) pair, both 1-based.
struct ArrayEntry {
  std::size_t doc = 0;
  std::size_t pos = 0;

  friend auto operator<=>(const ArrayEntry&, const ArrayEntry&) = default;
};

// Start positions (1-based) of the conjugates of one string in sorted order,
// ties broken by position.
struct ConjugateArray {
  std::vector<std::size_t> entries;
};

enum class DollarMode {
  none,      // conjugates of the strings themselves
  shared,    // every string extended with the same dollar
  distinct,  // string d extended with its own dollar, ranked by d
};

struct GeneralizedConjugateArray {
  DollarMode mode = DollarMode::none;
  std::vector<ArrayEntry> entries;
};

// Sorted suffixes of T_1$_1, ..., T_m$_m; pos ranges over 1..n_d+1.
struct GeneralizedSuffixArray {
  std::vector<ArrayEntry> entries;
};

ConjugateArray build_ca(std::string_view text);
ConjugateArray build_ca(std::span<const Symbol> text);

/// Omega-sorted conjugates of every string in the collection (optionally
/// dollar-extended). Ties: string index first, then position.
GeneralizedConjugateArray build_gca(const StringCollection& collection, DollarMode mode);

/// Comparison-sorted suffixes of the dollar-terminated strings; equal
/// suffixes are ordered by dollar rank.
GeneralizedSuffixArray build_gsa(const StringCollection& collection);

/// Suffix array of an integer text by prefix doubling, 1-based. Suffixes are
/// compared lexicographically with a proper prefix sorting first.
std::vector<std::size_t> suffix_array(std::span<const Symbol> text);

// The strings joined into one integer text, each followed by a dollar.
//   hash       -> 0
//   dollar $_d -> d (distinct) or 1 (shared)
//   byte c     -> c + m + 1
struct Concatenation {
  std::vector<Symbol> text;
  // doc_of[p-1] is the index of the string owning position p; the dollar
  // after T_d belongs to d, the trailing hash (if any) to 0.
  std::vector<std::size_t> doc_of;
  Symbol byte_offset = 0;
};

Concatenation concatenate(const StringCollection& collection, bool distinct_dollars,
                          bool hash_terminated);

// One "(d,i)" pair per line.
std::string to_text(std::span<const ArrayEntry> entries);

}  // namespace colbwt
