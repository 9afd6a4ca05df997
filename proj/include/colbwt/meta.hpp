#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/optimize.hpp"
#include "colbwt/transform.hpp"

namespace colbwt {

// A collection seen as a length-m word over the lexicographic ranks of its
// distinct strings. Symbols are 0-based ranks; letters a, b, c, ... in print.
struct MetaString {
  std::vector<std::size_t> symbols;
  std::map<std::string, std::size_t> rank_map;

  std::string str() const;
};

MetaString input_meta(const StringCollection& collection);

MetaString meta_from_letters(const std::string& letters);

// 1-based indices of the strings whose last symbols fill the first m
// positions of the variant's output (positions 1..m of the adapted form for
// concatBWT). Throws Error(Errc::variant_not_separator_based) for ebwt.
Permutation output_order(Variant variant, const StringCollection& collection);

MetaString output_meta(Variant variant, const StringCollection& collection);

// BWT(t$) with the dollar removed.
MetaString bwt_star(const MetaString& t);

// An order tau with mdol_ebwt(tau(M)) equal to the target up to dollar
// renaming. The output order of the variant is tried first, then every
// permutation when m <= max_m (GuardExceeded otherwise).
std::optional<Permutation> simulate_order(Variant variant, const StringCollection& collection,
                                          const Transform& target, std::size_t max_m = kDefaultGuard);

}  // namespace colbwt
