// Brute-force reference implementations for the tests. Everything here
// materializes rotations or expands powers explicitly and shares no code with
// the library beyond its data types.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "colbwt/collection.hpp"

namespace oracle {

using Word = std::vector<int>;

inline std::string rotate(const std::string& s, std::size_t k) {
  return s.substr(k) + s.substr(0, k);
}

inline Word rotate(const Word& s, std::size_t k) {
  Word out(s.begin() + static_cast<long>(k), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<long>(k));
  return out;
}

inline std::size_t root_length(const std::string& t) {
  for (std::size_t d = 1; d <= t.size(); ++d) {
    if (t.size() % d != 0) continue;
    std::string power;
    while (power.size() < t.size()) power += t.substr(0, d);
    if (power == t) return d;
  }
  return t.size();
}

template <class W>
W repeat_to(const W& s, std::size_t length) {
  W out;
  while (out.size() < length) out.insert(out.end(), s.begin(), s.end());
  out.resize(length);
  return out;
}

// s^w vs t^w by expanding both to lcm(|s|, |t|), then exponent.
template <class W>
int omega_cmp(const W& s, const W& t, std::size_t es, std::size_t et) {
  const std::size_t l = std::lcm(s.size(), t.size());
  const W a = repeat_to(s, l);
  const W b = repeat_to(t, l);
  if (a != b) return a < b ? -1 : 1;
  if (es != et) return es < et ? -1 : 1;
  return 0;
}

inline Word as_word(const std::string& s) {
  Word w;
  for (unsigned char c : s) w.push_back(c + 1000);
  return w;
}

inline char glyph_of(int symbol) {
  if (symbol == 0) return static_cast<char>(colbwt::kHash);
  if (symbol < 1000) return static_cast<char>(colbwt::kDollar);
  return static_cast<char>(symbol - 1000);
}

struct Row {
  Word key;
  std::size_t doc;
  std::size_t pos;
  int last;
};

// EBWT over conjugates; with `dollar`, each string gets the same dollar.
inline std::pair<std::string, std::vector<std::size_t>> ebwt(const colbwt::StringCollection& m,
                                                            bool dollar) {
  std::vector<Row> rows;
  std::vector<std::size_t> exps;
  for (std::size_t d = 0; d < m.size(); ++d) {
    Word w = as_word(m[d]);
    if (dollar) w.push_back(1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Word r = rotate(w, i);
      rows.push_back({r, d + 1, i + 1, r.back()});
    }
  }
  auto exp_of = [&](std::size_t doc) {
    return dollar ? std::size_t{1} : m[doc - 1].size() / root_length(m[doc - 1]);
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) {
    const int c = omega_cmp(x.key, y.key, exp_of(x.doc), exp_of(y.doc));
    if (c != 0) return c < 0;
    return std::pair(x.doc, x.pos) < std::pair(y.doc, y.pos);
  });
  std::string text;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    text.push_back(glyph_of(rows[j].last));
    if (rows[j].pos == 1) idx.push_back(j + 1);
  }
  return {text, idx};
}

// Sorted suffixes of T_d $_d with $_d a distinct symbol d.
inline std::pair<std::string, std::vector<std::size_t>> mdol_ebwt(const colbwt::StringCollection& m) {
  std::vector<Row> rows;
  for (std::size_t d = 0; d < m.size(); ++d) {
    Word w = as_word(m[d]);
    w.push_back(static_cast<int>(d + 1));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Word suffix(w.begin() + static_cast<long>(i), w.end());
      rows.push_back({suffix, d + 1, i + 1, i > 0 ? w[i - 1] : static_cast<int>(d + 1)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.key < y.key; });
  std::string text;
  std::vector<std::size_t> ranks;
  for (const auto& r : rows) {
    text.push_back(glyph_of(r.last));
    if (r.last < 1000) ranks.push_back(static_cast<std::size_t>(r.last));
  }
  return {text, ranks};
}

inline Word concatenation(const colbwt::StringCollection& m, bool distinct, bool hash) {
  Word w;
  for (std::size_t d = 0; d < m.size(); ++d) {
    const Word s = as_word(m[d]);
    w.insert(w.end(), s.begin(), s.end());
    w.push_back(distinct ? static_cast<int>(d + 1) : 1);
  }
  if (hash) w.push_back(0);
  return w;
}

// Last column of the sorted rotations; ties (equal rotations) by position.
inline std::pair<std::string, std::vector<std::size_t>> rotation_bwt(const Word& w) {
  std::vector<std::pair<Word, std::size_t>> rows;
  for (std::size_t i = 0; i < w.size(); ++i) rows.emplace_back(rotate(w, i), i);
  std::sort(rows.begin(), rows.end());
  std::string text;
  std::vector<std::size_t> ranks;
  for (const auto& [r, i] : rows) {
    text.push_back(glyph_of(r.back()));
    if (r.back() > 0 && r.back() < 1000) ranks.push_back(static_cast<std::size_t>(r.back()));
  }
  return {text, ranks};
}

inline std::pair<std::string, std::vector<std::size_t>> mdol_bwt(const colbwt::StringCollection& m) {
  return rotation_bwt(concatenation(m, true, false));
}

inline std::string concat_bwt(const colbwt::StringCollection& m) {
  return rotation_bwt(concatenation(m, false, true)).first;
}

inline std::string bwt(const std::string& t, bool sentinel) {
  Word w = as_word(t);
  if (sentinel) w.push_back(1);
  return rotation_bwt(w).first;
}

inline std::size_t runs(const std::string& s) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += (i == 0 || s[i] != s[i - 1]) ? 1 : 0;
  return r;
}

inline std::string unify(std::string s) {
  std::replace(s.begin(), s.end(), static_cast<char>(colbwt::kHash), static_cast<char>(colbwt::kDollar));
  return s;
}

inline colbwt::StringCollection permuted(const colbwt::StringCollection& m,
                                         const std::vector<std::size_t>& order) {
  std::vector<std::string> items;
  for (std::size_t i : order) items.push_back(m[i - 1]);
  return colbwt::StringCollection(items);
}

// Smallest run count of mdolEBWT over all input orders.
inline std::size_t ropt(const colbwt::StringCollection& m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::size_t best = ~std::size_t{0};
  do {
    best = std::min(best, runs(oracle::mdol_ebwt(permuted(m, order)).first));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// Every text of the multidollar family, one per order.
inline std::vector<std::string> mdol_family(const colbwt::StringCollection& m) {
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), std::size_t{1});
  std::vector<std::string> out;
  do {
    out.push_back(oracle::mdol_ebwt(permuted(m, order)).first);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline std::string meta_bwt_star(const std::string& t) {
  Word w;
  for (char c : t) w.push_back(c - 'a' + 1000 + 'a');
  w.push_back(1);
  std::string out;
  for (char c : rotation_bwt(w).first) {
    if (static_cast<unsigned char>(c) != colbwt::kDollar) out.push_back(c);
  }
  return out;
}

inline bool subsequence(const std::string& s, const std::string& t) {
  std::size_t i = 0;
  for (char c : t) {
    if (i < s.size() && s[i] == c) ++i;
  }
  return i == s.size();
}

// Seeded random collections over the first `sigma` letters of ACGT.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::string string(std::size_t max_len, std::size_t sigma) {
    static constexpr char kLetters[] = "ACGT";
    std::uniform_int_distribution<std::size_t> len(1, max_len);
    std::uniform_int_distribution<std::size_t> sym(0, sigma - 1);
    std::string s(len(rng_), 'A');
    for (char& c : s) c = kLetters[sym(rng_)];
    return s;
  }

  colbwt::StringCollection collection(std::size_t max_m, std::size_t max_len, std::size_t max_sigma,
                                      std::size_t min_m = 1) {
    std::uniform_int_distribution<std::size_t> count(min_m, max_m);
    std::uniform_int_distribution<std::size_t> sig(1, max_sigma);
    const std::size_t m = count(rng_);
    const std::size_t sigma = sig(rng_);
    std::vector<std::string> items;
    for (std::size_t d = 0; d < m; ++d) items.push_back(string(max_len, sigma));
    return colbwt::StringCollection(items);
  }

  colbwt::StringCollection primitive_collection(std::size_t max_m, std::size_t max_len,
                                                std::size_t max_sigma) {
    for (;;) {
      auto m = collection(max_m, max_len, max_sigma);
      const bool ok = std::all_of(m.items().begin(), m.items().end(),
                                  [](const std::string& s) { return root_length(s) == s.size(); });
      if (ok) return m;
    }
  }

  std::vector<std::size_t> selector(std::size_t m) {
    std::vector<std::size_t> sel;
    std::bernoulli_distribution keep(0.5);
    for (std::size_t i = 1; i <= m; ++i) {
      if (keep(rng_)) sel.push_back(i);
    }
    if (sel.empty()) sel.push_back(std::uniform_int_distribution<std::size_t>(1, m)(rng_));
    return sel;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
