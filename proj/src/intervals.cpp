#include "colbwt/intervals.hpp"

#include <algorithm>

#include "colbwt/arrays.hpp"

namespace colbwt {

std::vector<SapInterval> compute_sap_intervals(const StringCollection& collection) {
  const auto gsa = build_gsa(collection);
  const auto& e = gsa.entries;
  auto suffix = [&](std::size_t j) {
    return std::string_view(collection[e[j].doc - 1]).substr(e[j].pos - 1);
  };
  auto preceding = [&](std::size_t j) {
    return e[j].pos > 1 ? collection[e[j].doc - 1][e[j].pos - 2] : static_cast<char>(kDollar);
  };

  std::vector<SapInterval> out;
  std::size_t j = 0;
  while (j < e.size()) {
    std::size_t k = j + 1;
    while (k < e.size() && suffix(k) == suffix(j)) ++k;
    if (k - j >= 2) {
      SapInterval iv;
      iv.begin = j + 1;
      iv.end = k;
      iv.suffix = std::string(suffix(j));
      for (std::size_t x = j; x < k; ++x) iv.characters.push_back(preceding(x));
      std::sort(iv.characters.begin(), iv.characters.end());
      out.push_back(std::move(iv));
    }
    j = k;
  }
  return out;
}

bool is_interesting(const SapInterval& interval, bool dollars_equal) {
  const auto& c = interval.characters;
  if (c.empty()) return false;
  if (c.front() != c.back()) return true;
  return !dollars_equal && static_cast<unsigned char>(c.front()) == kDollar && c.size() >= 2;
}

std::vector<InterestingInterval> interesting_intervals(const StringCollection& collection,
                                                       bool dollars_equal) {
  auto all = compute_sap_intervals(collection);
  std::erase_if(all, [&](const SapInterval& iv) { return !is_interesting(iv, dollars_equal); });
  return all;
}

std::size_t count_runs(std::string_view text) {
  std::size_t runs = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i == 0 || text[i] != text[i - 1]) ++runs;
  }
  return runs;
}

std::size_t count_runs(const Transform& t, bool dollars_equal) {
  if (dollars_equal || !t.dollar_ranks) return count_runs(unify_sentinels(t.text));
  const auto& ranks = *t.dollar_ranks;
  std::size_t runs = 0;
  std::size_t k = 0;
  std::size_t previous_rank = 0;
  for (std::size_t i = 0; i < t.text.size(); ++i) {
    const bool dollar = static_cast<unsigned char>(t.text[i]) == kDollar;
    const std::size_t rank = dollar && k < ranks.size() ? ranks[k] : 0;
    if (i == 0 || t.text[i] != t.text[i - 1] || (dollar && rank != previous_rank)) ++runs;
    if (dollar) ++k;
    previous_rank = rank;
  }
  return runs;
}

RunLengthEncoding rle(std::string_view text) {
  RunLengthEncoding out;
  out.total_length = text.size();
  for (char c : text) {
    if (out.runs.empty() || out.runs.back().symbol != c) out.runs.push_back({c, 0});
    ++out.runs.back().length;
  }
  return out;
}

std::string rle_decode(const RunLengthEncoding& encoding) {
  std::string out;
  out.reserve(encoding.total_length);
  for (const auto& r : encoding.runs) out.append(r.length, r.symbol);
  return out;
}

bool pairwise_disjoint(const std::vector<SapInterval>& intervals) {
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (const auto& iv : intervals) spans.emplace_back(iv.begin, iv.end);
  std::sort(spans.begin(), spans.end());
  for (std::size_t i = 1; i < spans.size(); ++i) {
    if (spans[i].first <= spans[i - 1].second) return false;
  }
  return true;
}

std::optional<SapInterval> enclosing(const std::vector<SapInterval>& intervals, std::size_t pos) {
  for (const auto& iv : intervals) {
    if (iv.begin <= pos && pos <= iv.end) return iv;
  }
  return std::nullopt;
}

std::string format_interval(const SapInterval& interval) {
  return std::to_string(interval.begin) + ' ' + std::to_string(interval.end) + ' ' +
         (interval.suffix.empty() ? std::string("-") : interval.suffix) + ' ' +
         render(interval.characters);
}

}  // namespace colbwt
