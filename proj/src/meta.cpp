#include "colbwt/meta.hpp"

#include <algorithm>
#include <numeric>

#include "colbwt/arrays.hpp"
#include "colbwt/error.hpp"

namespace colbwt {

std::string MetaString::str() const {
  std::string out;
  for (std::size_t s : symbols) out.push_back(static_cast<char>('a' + s));
  return out;
}

MetaString input_meta(const StringCollection& collection) {
  MetaString t;
  for (const auto& s : collection.items()) t.rank_map.emplace(s, 0);
  std::size_t r = 0;
  for (auto& [s, rank] : t.rank_map) rank = r++;
  for (const auto& s : collection.items()) t.symbols.push_back(t.rank_map.at(s));
  return t;
}

MetaString meta_from_letters(const std::string& letters) {
  MetaString t;
  for (char c : letters) t.symbols.push_back(static_cast<std::size_t>(c - 'a'));
  return t;
}

Permutation output_order(Variant variant, const StringCollection& collection) {
  Permutation order;
  switch (variant) {
    case Variant::dol_ebwt: {
      for (const auto& e : build_gca(collection, DollarMode::shared).entries) {
        if (e.pos == collection[e.doc - 1].size() + 1) order.push_back(e.doc);
      }
      break;
    }
    case Variant::mdol_ebwt: {
      for (const auto& e : build_gsa(collection).entries) {
        if (e.pos == collection[e.doc - 1].size() + 1) order.push_back(e.doc);
      }
      break;
    }
    case Variant::mdol_bwt:
    case Variant::concat_bwt:
    case Variant::adapted_concat_bwt: {
      const bool distinct = variant == Variant::mdol_bwt;
      const auto cat = concatenate(collection, distinct, /*hash_terminated=*/!distinct);
      for (std::size_t p : suffix_array(cat.text)) {
        const Symbol s = cat.text[p - 1];
        if (s != 0 && s < cat.byte_offset) order.push_back(cat.doc_of[p - 1]);
      }
      break;
    }
    default:
      throw Error(Errc::variant_not_separator_based,
                  std::string(variant_name(variant)) + " has no dollar block");
  }
  return order;
}

MetaString output_meta(Variant variant, const StringCollection& collection) {
  MetaString t = input_meta(collection);
  const auto order = output_order(variant, collection);
  std::vector<std::size_t> symbols;
  for (std::size_t d : order) symbols.push_back(t.symbols[d - 1]);
  t.symbols = std::move(symbols);
  return t;
}

MetaString bwt_star(const MetaString& t) {
  std::vector<Symbol> text;
  for (std::size_t s : t.symbols) text.push_back(static_cast<Symbol>(s + 1));
  text.push_back(0);
  MetaString out;
  out.rank_map = t.rank_map;
  for (std::size_t p : build_ca(text).entries) {
    const Symbol s = text[p > 1 ? p - 2 : text.size() - 1];
    if (s != 0) out.symbols.push_back(s - 1);
  }
  return out;
}

std::optional<Permutation> simulate_order(Variant variant, const StringCollection& collection,
                                          const Transform& target, std::size_t max_m) {
  if (!is_separator_based(variant)) {
    throw Error(Errc::variant_not_separator_based, std::string(variant_name(variant)));
  }
  std::string want = target.text;
  if (target.variant == Variant::concat_bwt) want = adapt_concat(target).text;
  want = unify_sentinels(want);
  auto matches = [&](const Permutation& order) {
    return mdol_ebwt(collection.permuted(order)).text == want;
  };

  const auto candidate = output_order(variant, collection);
  if (matches(candidate)) return candidate;

  if (collection.size() > max_m) {
    throw Error(Errc::guard_exceeded, "m = " + std::to_string(collection.size()) + " exceeds guard " +
                                          std::to_string(max_m));
  }
  Permutation order(collection.size());
  std::iota(order.begin(), order.end(), std::size_t{1});
  do {
    if (matches(order)) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

}  // namespace colbwt
