#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/transform.hpp"

namespace colbwt {

// True iff s embeds into t in order. With dollars_equal, hash and dollar
// match each other.
bool is_subsequence(std::string_view s, std::string_view t, bool dollars_equal = true);

// Sub-collection at the given strictly increasing 1-based positions.
// Throws Error(Errc::invalid_selector) otherwise.
StringCollection select(const StringCollection& collection, const std::vector<std::size_t>& selector);

// variant(selected) is a subsequence of variant(collection), sentinels unified.
bool check_dynamicity(const StringCollection& collection, const std::vector<std::size_t>& selector,
                      Variant variant);

}  // namespace colbwt
