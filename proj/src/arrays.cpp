#include "colbwt/arrays.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "colbwt/order.hpp"

namespace colbwt {

namespace {

// Cyclic prefix doubling. After the loop, equal ranks mean equal rotations;
// the final pass orders those by position.
ConjugateArray cyclic_sort(std::vector<std::size_t> rank) {
  const std::size_t n = rank.size();
  ConjugateArray ca;
  if (n == 0) return ca;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> next(n);
  for (std::size_t k = 1; k < n; k <<= 1) {
    auto key = [&](std::size_t i) { return std::pair(rank[i], rank[(i + k) % n]); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[order[0]] = 0;
    for (std::size_t j = 1; j < n; ++j) {
      next[order[j]] = next[order[j - 1]] + (key(order[j - 1]) < key(order[j]) ? 1 : 0);
    }
    rank.swap(next);
    if (rank[order[n - 1]] == n - 1) break;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(rank[a], a) < std::pair(rank[b], b);
  });
  ca.entries.reserve(n);
  for (std::size_t i : order) ca.entries.push_back(i + 1);
  return ca;
}

}  // namespace

ConjugateArray build_ca(std::string_view text) {
  std::vector<std::size_t> rank(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) rank[i] = static_cast<unsigned char>(text[i]);
  return cyclic_sort(std::move(rank));
}

ConjugateArray build_ca(std::span<const Symbol> text) {
  return cyclic_sort(std::vector<std::size_t>(text.begin(), text.end()));
}

GeneralizedConjugateArray build_gca(const StringCollection& collection, DollarMode mode) {
  const std::size_t m = collection.size();
  const Symbol offset = static_cast<Symbol>(m + 1);

  // Each string as a symbol vector, dollar-extended per mode.
  std::vector<std::vector<Symbol>> strings(m);
  std::vector<std::size_t> exponent(m, 1);
  for (std::size_t d = 0; d < m; ++d) {
    auto& s = strings[d];
    for (unsigned char c : collection[d]) s.push_back(c + offset);
    switch (mode) {
      case DollarMode::none:
        exponent[d] = collection[d].size() / primitive_root_length(collection[d]);
        break;
      case DollarMode::shared: s.push_back(1); break;
      case DollarMode::distinct: s.push_back(static_cast<Symbol>(d + 1)); break;
    }
  }

  GeneralizedConjugateArray gca;
  gca.mode = mode;
  for (std::size_t d = 0; d < m; ++d) {
    for (std::size_t i = 1; i <= strings[d].size(); ++i) gca.entries.push_back({d + 1, i});
  }

  // Omega comparison of two conjugates: the infinite words agree iff their
  // first |a| + |b| symbols agree (periodicity lemma).
  auto less = [&](const ArrayEntry& x, const ArrayEntry& y) {
    const auto& a = strings[x.doc - 1];
    const auto& b = strings[y.doc - 1];
    const std::size_t limit = a.size() + b.size();
    std::size_t i = x.pos - 1;
    std::size_t j = y.pos - 1;
    for (std::size_t k = 0; k < limit; ++k) {
      if (a[i] != b[j]) return a[i] < b[j];
      if (++i == a.size()) i = 0;
      if (++j == b.size()) j = 0;
    }
    const std::size_t ex = exponent[x.doc - 1];
    const std::size_t ey = exponent[y.doc - 1];
    if (ex != ey) return ex < ey;
    return x < y;
  };
  std::sort(gca.entries.begin(), gca.entries.end(), less);
  return gca;
}

GeneralizedSuffixArray build_gsa(const StringCollection& collection) {
  GeneralizedSuffixArray gsa;
  gsa.entries.reserve(collection.total_length() + collection.size());
  for (std::size_t d = 0; d < collection.size(); ++d) {
    for (std::size_t i = 1; i <= collection[d].size() + 1; ++i) gsa.entries.push_back({d + 1, i});
  }
  auto suffix = [&](const ArrayEntry& e) {
    return std::string_view(collection[e.doc - 1]).substr(e.pos - 1);
  };
  std::sort(gsa.entries.begin(), gsa.entries.end(), [&](const ArrayEntry& x, const ArrayEntry& y) {
    // Reaching the end of a suffix means reading its dollar, which is smaller
    // than every byte; equal suffixes fall through to dollar rank.
    const auto c = lex_compare(suffix(x), suffix(y));
    if (c != 0) return c < 0;
    return x.doc < y.doc;
  });
  return gsa;
}

std::vector<std::size_t> suffix_array(std::span<const Symbol> text) {
  const std::size_t n = text.size();
  std::vector<std::size_t> sa(n);
  if (n == 0) return sa;
  std::iota(sa.begin(), sa.end(), std::size_t{0});
  std::vector<std::int64_t> rank(text.begin(), text.end());
  std::vector<std::int64_t> next(n);
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::size_t i) {
      return std::pair(rank[i], i + k < n ? rank[i + k] : std::int64_t{-1});
    };
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    next[sa[0]] = 0;
    for (std::size_t j = 1; j < n; ++j) {
      next[sa[j]] = next[sa[j - 1]] + (key(sa[j - 1]) < key(sa[j]) ? 1 : 0);
    }
    rank.swap(next);
    if (static_cast<std::size_t>(rank[sa[n - 1]]) == n - 1 || k >= n) break;
  }
  for (auto& p : sa) ++p;
  return sa;
}

Concatenation concatenate(const StringCollection& collection, bool distinct_dollars,
                          bool hash_terminated) {
  Concatenation out;
  const std::size_t m = collection.size();
  out.byte_offset = static_cast<Symbol>(m + 1);
  out.text.reserve(collection.total_length() + m + 1);
  out.doc_of.reserve(collection.total_length() + m + 1);
  for (std::size_t d = 0; d < m; ++d) {
    for (unsigned char c : collection[d]) {
      out.text.push_back(c + out.byte_offset);
      out.doc_of.push_back(d + 1);
    }
    out.text.push_back(distinct_dollars ? static_cast<Symbol>(d + 1) : Symbol{1});
    out.doc_of.push_back(d + 1);
  }
  if (hash_terminated) {
    out.text.push_back(0);
    out.doc_of.push_back(0);
  }
  return out;
}

std::string to_text(std::span<const ArrayEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    out += '(' + std::to_string(e.doc) + ',' + std::to_string(e.pos) + ")\n";
  }
  return out;
}

}  // namespace colbwt
