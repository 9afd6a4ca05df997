#include "colbwt/dynamics.hpp"

#include "colbwt/error.hpp"

namespace colbwt {

bool is_subsequence(std::string_view s, std::string_view t, bool dollars_equal) {
  auto canon = [&](char c) {
    return dollars_equal && static_cast<unsigned char>(c) == kHash ? static_cast<char>(kDollar) : c;
  };
  std::size_t i = 0;
  for (std::size_t j = 0; i < s.size() && j < t.size(); ++j) {
    if (canon(s[i]) == canon(t[j])) ++i;
  }
  return i == s.size();
}

StringCollection select(const StringCollection& collection, const std::vector<std::size_t>& selector) {
  std::vector<std::string> items;
  std::size_t previous = 0;
  for (std::size_t i : selector) {
    if (i <= previous || i > collection.size()) {
      throw Error(Errc::invalid_selector, "selector must be strictly increasing within 1.." +
                                              std::to_string(collection.size()));
    }
    items.push_back(collection[i - 1]);
    previous = i;
  }
  if (items.empty()) throw Error(Errc::invalid_selector, "empty selector");
  return StringCollection(std::move(items));
}

bool check_dynamicity(const StringCollection& collection, const std::vector<std::size_t>& selector,
                      Variant variant) {
  const auto part = apply_variant(variant, select(collection, selector));
  const auto whole = apply_variant(variant, collection);
  return is_subsequence(part.text, whole.text, /*dollars_equal=*/true);
}

}  // namespace colbwt
