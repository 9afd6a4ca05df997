#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"

namespace colbwt {

enum class Variant {
  ebwt,
  dol_ebwt,
  mdol_ebwt,
  mdol_bwt,
  concat_bwt,
  adapted_concat_bwt,
  bwt,  // single string
};

std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;
bool is_separator_based(Variant v) noexcept;

// Output of every transform. Sentinels are the bytes kDollar / kHash; distinct
// dollars are one byte plus a rank carried in dollar_ranks.
struct Transform {
  Variant variant = Variant::bwt;
  std::string text;
  // Rank (1..m) of each dollar occurrence, in text order. mdolEBWT / mdolBWT only.
  std::optional<std::vector<std::size_t>> dollar_ranks;
  // EBWT recovery indices: 1-based rows of the input strings, ascending.
  std::optional<std::vector<std::size_t>> i_tuple;
};

enum class PrimitivePolicy {
  strict,      // reject non-primitive strings
  permissive,  // sort their conjugates with the index/position tie rule
};

Transform ebwt(const StringCollection& collection, PrimitivePolicy policy = PrimitivePolicy::strict);
Transform dol_ebwt(const StringCollection& collection);
Transform mdol_ebwt(const StringCollection& collection);
Transform mdol_bwt(const StringCollection& collection);
Transform concat_bwt(const StringCollection& collection);
Transform adapted_concat_bwt(const StringCollection& collection);

// Drops the leading dollar of a concatBWT and turns its hash into a dollar.
Transform adapt_concat(const Transform& concat);

Transform bwt_single(std::string_view text, bool with_sentinel);

// BWT(U^k) from BWT(U): every symbol repeated k times in place.
Transform bwt_power(const Transform& bwt_of_root, std::size_t k);

Transform apply_variant(Variant v, const StringCollection& collection);

// '$' / '#' glyph rendering and its inverse.
std::string render(std::string_view text);
std::string parse_glyphs(std::string_view glyphs);

// Rendering with dollar ranks spelled out, e.g. "TA$6$5$1T".
std::string render_ranked(const Transform& t);

// Hash becomes dollar; used whenever dollars are compared up to renaming.
std::string unify_sentinels(std::string_view text);

std::size_t count_dollars(std::string_view text) noexcept;

// Sidecar metadata: "I: 9 10 12" for ebwt, or one "pos rank" line per dollar.
std::string write_metadata(const Transform& t);
// Fills i_tuple / dollar_ranks from sidecar text. Unknown "key: value" lines
// are skipped. Throws Error(Errc::malformed_transform) on unparsable content.
void read_metadata(std::string_view sidecar, Transform& t);

}  // namespace colbwt
