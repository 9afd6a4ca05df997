#include "colbwt/inversion.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "colbwt/error.hpp"
#include "colbwt/order.hpp"

namespace colbwt {

namespace {

bool is_dollar(char c) { return static_cast<unsigned char>(c) == kDollar; }
bool is_hash(char c) { return static_cast<unsigned char>(c) == kHash; }

void require_ranks(const Transform& t, std::size_t m) {
  if (!t.dollar_ranks) {
    throw Error(Errc::missing_dollar_ranks, std::string(variant_name(t.variant)) + " needs dollar ranks");
  }
  const auto& ranks = *t.dollar_ranks;
  if (ranks.size() != m || !is_permutation_of_range(ranks, m)) {
    throw Error(Errc::malformed_transform, "dollar ranks are not a permutation of 1..m");
  }
}

// Reads one string backwards from the row whose last symbol is a sentinel,
// stopping at the next sentinel. Returns it in forward order.
std::string walk_to_sentinel(std::string_view text, const StandardPermutation& sp, std::size_t from) {
  std::string out;
  std::size_t i = sp.pi[from - 1];
  while (!is_sentinel(static_cast<unsigned char>(text[i - 1]))) {
    out.push_back(text[i - 1]);
    i = sp.pi[i - 1];
    if (out.size() > text.size()) {
      throw Error(Errc::malformed_transform, "walk does not reach a sentinel");
    }
  }
  if (out.empty()) throw Error(Errc::malformed_transform, "two adjacent sentinels");
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

StandardPermutation standard_permutation(std::string_view s, std::span<const std::size_t> dollar_ranks) {
  const std::size_t n = s.size();
  std::vector<std::size_t> rank_of(n, 0);
  if (!dollar_ranks.empty()) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (is_dollar(s[i]) && k < dollar_ranks.size()) rank_of[i] = dollar_ranks[k++];
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(static_cast<unsigned char>(s[a]), rank_of[a]) <
           std::tuple(static_cast<unsigned char>(s[b]), rank_of[b]);
  });
  StandardPermutation sp;
  sp.pi.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) sp.pi[order[r]] = r + 1;

  std::vector<bool> seen(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    auto& cycle = sp.cycles.emplace_back();
    for (std::size_t i = start; !seen[i]; i = sp.pi[i] - 1) {
      seen[i] = true;
      cycle.push_back(i + 1);
    }
  }
  return sp;
}

StandardPermutation standard_permutation(const Transform& t) {
  if (t.dollar_ranks) return standard_permutation(t.text, *t.dollar_ranks);
  return standard_permutation(t.text);
}

StringCollection invert_ebwt(const Transform& t) {
  if (!t.i_tuple || t.i_tuple->empty()) {
    throw Error(Errc::invalid_index_tuple, "ebwt needs a nonempty index tuple");
  }
  const auto& idx = *t.i_tuple;
  const std::size_t n = t.text.size();
  const auto sp = standard_permutation(t.text);
  if (sp.cycles.size() != idx.size()) {
    throw Error(Errc::invalid_index_tuple, std::to_string(sp.cycles.size()) + " cycles for " +
                                               std::to_string(idx.size()) + " indices");
  }
  std::vector<std::size_t> cycle_of(n + 1, 0);
  for (std::size_t c = 0; c < sp.cycles.size(); ++c) {
    for (std::size_t i : sp.cycles[c]) cycle_of[i] = c + 1;
  }
  std::vector<bool> used(sp.cycles.size() + 1, false);
  std::vector<std::string> strings;
  for (std::size_t start : idx) {
    if (start < 1 || start > n) {
      throw Error(Errc::invalid_index_tuple, "index " + std::to_string(start) + " out of range");
    }
    if (used[cycle_of[start]]) throw Error(Errc::invalid_index_tuple, "two indices share a cycle");
    used[cycle_of[start]] = true;
    std::string s;
    std::size_t i = start;
    do {
      s.push_back(t.text[i - 1]);
      i = sp.pi[i - 1];
    } while (i != start);
    std::reverse(s.begin(), s.end());
    strings.push_back(std::move(s));
  }
  std::stable_sort(strings.begin(), strings.end(),
                   [](const std::string& a, const std::string& b) { return omega_compare(a, b) < 0; });
  return StringCollection(std::move(strings));
}

StringCollection invert_dollar_variant(const Transform& t) {
  const std::string_view text = t.text;
  const std::size_t m = count_dollars(text);
  if (m == 0) throw Error(Errc::malformed_transform, "no dollar in transform");
  if (std::any_of(text.begin(), text.end(), is_hash)) {
    throw Error(Errc::malformed_transform, "unexpected hash");
  }

  switch (t.variant) {
    case Variant::dol_ebwt: {
      const auto sp = standard_permutation(text);
      if (sp.cycles.size() != m) {
        throw Error(Errc::malformed_transform, "expected one cycle per dollar");
      }
      std::vector<std::string> strings;
      for (std::size_t p = 1; p <= text.size(); ++p) {
        if (is_dollar(text[p - 1])) strings.push_back(walk_to_sentinel(text, sp, p));
      }
      std::sort(strings.begin(), strings.end());
      return StringCollection(std::move(strings));
    }
    case Variant::mdol_ebwt:
    case Variant::mdol_bwt: {
      require_ranks(t, m);
      const auto sp = standard_permutation(t);
      const std::size_t expected = t.variant == Variant::mdol_ebwt ? m : 1;
      if (sp.cycles.size() != expected) {
        throw Error(Errc::malformed_transform, std::to_string(sp.cycles.size()) +
                                                   " cycles, expected " + std::to_string(expected));
      }
      std::vector<std::string> strings(m);
      std::size_t k = 0;
      for (std::size_t p = 1; p <= text.size(); ++p) {
        if (!is_dollar(text[p - 1])) continue;
        strings[(*t.dollar_ranks)[k++] - 1] = walk_to_sentinel(text, sp, p);
      }
      return StringCollection(std::move(strings));
    }
    case Variant::adapted_concat_bwt: return invert_adapted_concat_bwt(t);
    default:
      throw Error(Errc::malformed_transform,
                  std::string(variant_name(t.variant)) + " is not a dollar variant");
  }
}

StringCollection invert_concat_bwt(const Transform& t) {
  const std::string_view text = t.text;
  const auto hashes = std::count_if(text.begin(), text.end(), is_hash);
  if (hashes != 1) {
    throw Error(Errc::malformed_transform, "expected one hash, found " + std::to_string(hashes));
  }
  const auto sp = standard_permutation(text);
  if (sp.cycles.size() != 1) throw Error(Errc::malformed_transform, "walk does not close");
  const std::size_t start = static_cast<std::size_t>(std::find_if(text.begin(), text.end(), is_hash) -
                                                     text.begin()) + 1;
  // Reading backwards from the hash rotation spells T_m $ ... T_1 $ reversed.
  std::string whole;
  for (std::size_t i = sp.pi[start - 1]; i != start; i = sp.pi[i - 1]) whole.push_back(text[i - 1]);
  std::reverse(whole.begin(), whole.end());
  if (whole.empty() || !is_dollar(whole.back())) {
    throw Error(Errc::malformed_transform, "concatenation does not end with a dollar");
  }
  std::vector<std::string> strings;
  std::string current;
  for (char c : whole) {
    if (!is_dollar(c)) {
      current.push_back(c);
      continue;
    }
    if (current.empty()) throw Error(Errc::malformed_transform, "empty string between dollars");
    strings.push_back(std::move(current));
    current.clear();
  }
  return StringCollection(std::move(strings));
}

StringCollection invert_adapted_concat_bwt(const Transform& t) {
  Transform full;
  full.variant = Variant::concat_bwt;
  full.text = static_cast<char>(kDollar) + t.text;
  for (std::size_t p = 1; p < full.text.size(); ++p) {
    if (!is_dollar(full.text[p])) continue;
    full.text[p] = static_cast<char>(kHash);
    try {
      return invert_concat_bwt(full);
    } catch (const Error&) {
    }
    full.text[p] = static_cast<char>(kDollar);
  }
  throw Error(Errc::malformed_transform, "no dollar can be the hash");
}

StringCollection invert(const Transform& t) {
  switch (t.variant) {
    case Variant::ebwt: return invert_ebwt(t);
    case Variant::dol_ebwt:
    case Variant::mdol_ebwt:
    case Variant::mdol_bwt: return invert_dollar_variant(t);
    case Variant::concat_bwt: return invert_concat_bwt(t);
    case Variant::adapted_concat_bwt: return invert_adapted_concat_bwt(t);
    case Variant::bwt: {
      const std::size_t dollars = count_dollars(t.text);
      if (dollars != 1) throw Error(Errc::malformed_transform, "bwt needs exactly one dollar");
      const auto sp = standard_permutation(t.text);
      const std::size_t p = t.text.find(static_cast<char>(kDollar)) + 1;
      return StringCollection({walk_to_sentinel(t.text, sp, p)});
    }
  }
  throw Error(Errc::malformed_transform, "unknown variant");
}

}  // namespace colbwt
