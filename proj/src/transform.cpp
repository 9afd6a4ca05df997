#include "colbwt/transform.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

#include "colbwt/arrays.hpp"
#include "colbwt/error.hpp"
#include "colbwt/order.hpp"

namespace colbwt {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 7> kVariantNames{{
    {Variant::ebwt, "ebwt"},
    {Variant::dol_ebwt, "dolEBWT"},
    {Variant::mdol_ebwt, "mdolEBWT"},
    {Variant::mdol_bwt, "mdolBWT"},
    {Variant::concat_bwt, "concatBWT"},
    {Variant::adapted_concat_bwt, "adaptedConcatBWT"},
    {Variant::bwt, "bwt"},
}};

// Last column of the rotations of `text` listed in `sa` order, mapped back to
// bytes. Dollar symbols record their rank when `ranked`.
Transform last_column(Variant variant, const Concatenation& cat, std::span<const std::size_t> sa,
                      bool ranked) {
  Transform out;
  out.variant = variant;
  out.text.reserve(sa.size());
  std::vector<std::size_t> ranks;
  const std::size_t n = cat.text.size();
  for (std::size_t p : sa) {
    const Symbol s = cat.text[p > 1 ? p - 2 : n - 1];
    if (s == 0) {
      out.text.push_back(static_cast<char>(kHash));
    } else if (s < cat.byte_offset) {
      out.text.push_back(static_cast<char>(kDollar));
      ranks.push_back(s);
    } else {
      out.text.push_back(static_cast<char>(s - cat.byte_offset));
    }
  }
  if (ranked) out.dollar_ranks = std::move(ranks);
  return out;
}

std::vector<std::size_t> parse_numbers(std::string_view line) {
  std::vector<std::size_t> values;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t')) ++k;
    if (k == line.size()) break;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + k, line.data() + line.size(), value);
    if (ec != std::errc() || ptr == line.data() + k) {
      throw Error(Errc::malformed_transform, "bad number in metadata: '" + std::string(line) + "'");
    }
    values.push_back(value);
    k = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

}  // namespace

std::string_view variant_name(Variant v) noexcept {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (const auto& [variant, n] : kVariantNames) {
    if (n == name) return variant;
  }
  return std::nullopt;
}

bool is_separator_based(Variant v) noexcept {
  return v != Variant::ebwt && v != Variant::bwt;
}

Transform ebwt(const StringCollection& collection, PrimitivePolicy policy) {
  if (policy == PrimitivePolicy::strict) {
    for (std::size_t d = 0; d < collection.size(); ++d) {
      if (!is_primitive(collection[d])) {
        throw Error(Errc::non_primitive_input,
                    "string " + std::to_string(d + 1) + " is a proper power");
      }
    }
  }
  const auto gca = build_gca(collection, DollarMode::none);
  Transform out;
  out.variant = Variant::ebwt;
  out.text.reserve(gca.entries.size());
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < gca.entries.size(); ++j) {
    const auto& e = gca.entries[j];
    const std::string& s = collection[e.doc - 1];
    out.text.push_back(e.pos > 1 ? s[e.pos - 2] : s.back());
    if (e.pos == 1) rows.push_back(j + 1);
  }
  out.i_tuple = std::move(rows);
  return out;
}

Transform dol_ebwt(const StringCollection& collection) {
  const auto gca = build_gca(collection, DollarMode::shared);
  Transform out;
  out.variant = Variant::dol_ebwt;
  out.text.reserve(gca.entries.size());
  for (const auto& e : gca.entries) {
    out.text.push_back(e.pos > 1 ? collection[e.doc - 1][e.pos - 2] : static_cast<char>(kDollar));
  }
  return out;
}

Transform mdol_ebwt(const StringCollection& collection) {
  const auto gsa = build_gsa(collection);
  Transform out;
  out.variant = Variant::mdol_ebwt;
  out.text.reserve(gsa.entries.size());
  std::vector<std::size_t> ranks;
  for (const auto& e : gsa.entries) {
    if (e.pos > 1) {
      out.text.push_back(collection[e.doc - 1][e.pos - 2]);
    } else {
      out.text.push_back(static_cast<char>(kDollar));
      ranks.push_back(e.doc);
    }
  }
  out.dollar_ranks = std::move(ranks);
  return out;
}

Transform mdol_bwt(const StringCollection& collection) {
  const auto cat = concatenate(collection, /*distinct_dollars=*/true, /*hash_terminated=*/false);
  const auto sa = suffix_array(cat.text);
  return last_column(Variant::mdol_bwt, cat, sa, /*ranked=*/true);
}

Transform concat_bwt(const StringCollection& collection) {
  const auto cat = concatenate(collection, /*distinct_dollars=*/false, /*hash_terminated=*/true);
  const auto sa = suffix_array(cat.text);
  return last_column(Variant::concat_bwt, cat, sa, /*ranked=*/false);
}

Transform adapt_concat(const Transform& concat) {
  Transform out;
  out.variant = Variant::adapted_concat_bwt;
  out.text = concat.text.empty() ? std::string() : concat.text.substr(1);
  std::replace(out.text.begin(), out.text.end(), static_cast<char>(kHash), static_cast<char>(kDollar));
  return out;
}

Transform adapted_concat_bwt(const StringCollection& collection) {
  return adapt_concat(concat_bwt(collection));
}

Transform bwt_single(std::string_view text, bool with_sentinel) {
  std::string extended(text);
  if (with_sentinel) extended.push_back(static_cast<char>(kDollar));
  const auto ca = build_ca(std::string_view(extended));
  Transform out;
  out.variant = Variant::bwt;
  out.text.reserve(extended.size());
  for (std::size_t i : ca.entries) {
    out.text.push_back(extended[i > 1 ? i - 2 : extended.size() - 1]);
  }
  return out;
}

Transform bwt_power(const Transform& bwt_of_root, std::size_t k) {
  Transform out = bwt_of_root;
  out.text.clear();
  out.text.reserve(bwt_of_root.text.size() * k);
  for (char c : bwt_of_root.text) out.text.append(k, c);
  return out;
}

Transform apply_variant(Variant v, const StringCollection& collection) {
  switch (v) {
    case Variant::ebwt: return ebwt(collection);
    case Variant::dol_ebwt: return dol_ebwt(collection);
    case Variant::mdol_ebwt: return mdol_ebwt(collection);
    case Variant::mdol_bwt: return mdol_bwt(collection);
    case Variant::concat_bwt: return concat_bwt(collection);
    case Variant::adapted_concat_bwt: return adapted_concat_bwt(collection);
    case Variant::bwt:
      if (collection.size() != 1) {
        throw Error(Errc::invalid_selector, "bwt applies to a single string");
      }
      return bwt_single(collection[0], /*with_sentinel=*/true);
  }
  return {};
}

std::string render(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (static_cast<unsigned char>(c) == kDollar) c = kDollarGlyph;
    else if (static_cast<unsigned char>(c) == kHash) c = kHashGlyph;
  }
  return out;
}

std::string parse_glyphs(std::string_view glyphs) {
  std::string out(glyphs);
  for (char& c : out) {
    if (c == kDollarGlyph) c = static_cast<char>(kDollar);
    else if (c == kHashGlyph) c = static_cast<char>(kHash);
  }
  return out;
}

std::string render_ranked(const Transform& t) {
  std::string out;
  std::size_t k = 0;
  for (char c : t.text) {
    const auto u = static_cast<unsigned char>(c);
    if (u == kDollar) {
      out += kDollarGlyph;
      if (t.dollar_ranks && k < t.dollar_ranks->size()) out += std::to_string((*t.dollar_ranks)[k]);
      ++k;
    } else if (u == kHash) {
      out += kHashGlyph;
    } else {
      out += c;
    }
  }
  return out;
}

std::string unify_sentinels(std::string_view text) {
  std::string out(text);
  std::replace(out.begin(), out.end(), static_cast<char>(kHash), static_cast<char>(kDollar));
  return out;
}

std::size_t count_dollars(std::string_view text) noexcept {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), static_cast<char>(kDollar)));
}

std::string write_metadata(const Transform& t) {
  std::ostringstream out;
  if (t.i_tuple) {
    out << "I:";
    for (std::size_t i : *t.i_tuple) out << ' ' << i;
    out << '\n';
  }
  if (t.dollar_ranks) {
    std::size_t k = 0;
    for (std::size_t p = 0; p < t.text.size(); ++p) {
      if (static_cast<unsigned char>(t.text[p]) != kDollar) continue;
      if (k < t.dollar_ranks->size()) out << p + 1 << ' ' << (*t.dollar_ranks)[k] << '\n';
      ++k;
    }
  }
  return out.str();
}

void read_metadata(std::string_view sidecar, Transform& t) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t start = 0;
  while (start < sidecar.size()) {
    std::size_t end = sidecar.find('\n', start);
    if (end == std::string_view::npos) end = sidecar.size();
    std::string_view line = sidecar.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("I:")) {
      t.i_tuple = parse_numbers(line.substr(2));
      continue;
    }
    if (line.find(':') != std::string_view::npos) continue;
    const auto values = parse_numbers(line);
    if (values.size() != 2) {
      throw Error(Errc::malformed_transform, "expected 'pos rank', got '" + std::string(line) + "'");
    }
    pairs.emplace_back(values[0], values[1]);
  }
  if (pairs.empty()) return;
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::size_t> ranks;
  for (const auto& [pos, rank] : pairs) {
    if (pos < 1 || pos > t.text.size() || static_cast<unsigned char>(t.text[pos - 1]) != kDollar) {
      throw Error(Errc::malformed_transform,
                  "metadata names position " + std::to_string(pos) + " which holds no dollar");
    }
    ranks.push_back(rank);
  }
  t.dollar_ranks = std::move(ranks);
}

}  // namespace colbwt
