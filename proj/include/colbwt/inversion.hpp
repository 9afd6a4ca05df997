#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/transform.hpp"

namespace colbwt {

// pi[i-1] = pi(i), all values 1-based. Cycles are listed from their smallest
// element, in increasing order of that element.
struct StandardPermutation {
  std::vector<std::size_t> pi;
  std::vector<std::vector<std::size_t>> cycles;
};

// Stable rank of every symbol. When ranks are given, dollars are ordered by
// rank (ranks[k] belongs to the k-th dollar of s).
StandardPermutation standard_permutation(std::string_view s,
                                         std::span<const std::size_t> dollar_ranks = {});

StandardPermutation standard_permutation(const Transform& t);

// Strings come back in omega order.
StringCollection invert_ebwt(const Transform& t);

// dolEBWT: lex-sorted strings. mdolEBWT / mdolBWT: input order.
StringCollection invert_dollar_variant(const Transform& t);

StringCollection invert_concat_bwt(const Transform& t);

// The adapted form loses which dollar was the hash. Every candidate is tried
// in increasing position order; the first one that inverts cleanly wins. The
// strings come back as the right multiset, not always in input order.
StringCollection invert_adapted_concat_bwt(const Transform& t);

StringCollection invert(const Transform& t);

}  // namespace colbwt
