#include "colbwt/optimize.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "colbwt/error.hpp"

namespace colbwt {

namespace {

Permutation identity(std::size_t m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), std::size_t{1});
  return p;
}

OptimizationResult finish(const StringCollection& collection, Permutation order, Method method) {
  OptimizationResult r;
  r.transform = mdol_ebwt(collection.permuted(order));
  r.runs = count_runs(r.transform, /*dollars_equal=*/true);
  r.order = std::move(order);
  r.method = method;
  return r;
}

std::string distinct_symbols(std::string_view sorted) {
  std::string out(sorted);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Writes the grouped runs of an interval into text (positions 1-based).
void write_interval(std::string& text, const SapInterval& iv, std::string_view order) {
  std::size_t p = iv.begin - 1;
  for (char c : order) {
    const auto k = std::count(iv.characters.begin(), iv.characters.end(), c);
    for (long j = 0; j < k; ++j) text[p++] = c;
  }
}

// Realizes the arrangement and checks the result against the text built by hand.
OptimizationResult realize_arrangement(const StringCollection& collection,
                                       std::vector<Arrangement> arrangement, const std::string& built,
                                       Method method) {
  GroupOrders orders;
  for (const auto& a : arrangement) orders[a.interval.suffix] = a.order;
  auto r = finish(collection, realize(collection, orders), method);
  if (unify_sentinels(r.transform.text) != built) {
    throw std::logic_error("arrangement not realized by witness order");
  }
  r.arrangement = std::move(arrangement);
  return r;
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::input: return "input";
    case Method::colex: return "colex";
    case Method::plus: return "plus";
    case Method::opt: return "opt";
    case Method::bruteforce: return "bruteforce";
  }
  return "unknown";
}

Permutation realize(const StringCollection& collection, const GroupOrders& orders) {
  auto before = [&](std::size_t a, std::size_t b) {
    const std::string& s = collection[a];
    const std::string& t = collection[b];
    std::size_t common = 0;
    while (common < s.size() && common < t.size() &&
           s[s.size() - 1 - common] == t[t.size() - 1 - common]) {
      ++common;
    }
    if (common == s.size() && common == t.size()) return false;
    const char x = common < s.size() ? s[s.size() - 1 - common] : static_cast<char>(kDollar);
    const char y = common < t.size() ? t[t.size() - 1 - common] : static_cast<char>(kDollar);
    const auto it = orders.find(std::string_view(s).substr(s.size() - common));
    if (it != orders.end()) {
      const auto px = it->second.find(x);
      const auto py = it->second.find(y);
      if (px != py) return px < py;
    }
    return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
  };
  Permutation idx(collection.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), before);
  for (auto& i : idx) ++i;
  return idx;
}

OptimizationResult input_bwt(const StringCollection& collection) {
  return finish(collection, identity(collection.size()), Method::input);
}

OptimizationResult colex_bwt(const StringCollection& collection) {
  return finish(collection, realize(collection, {}), Method::colex);
}

OptimizationResult plus_bwt(const StringCollection& collection) {
  const auto intervals = interesting_intervals(collection);
  std::string text = unify_sentinels(colex_bwt(collection).transform.text);
  const std::size_t n = text.size();
  std::vector<bool> free(n + 2, false);
  for (const auto& iv : intervals) {
    for (std::size_t p = iv.begin; p <= iv.end; ++p) free[p] = true;
  }

  std::vector<Arrangement> arrangement;
  for (const auto& iv : intervals) {
    std::string order = distinct_symbols(iv.characters);
    char front = 0;
    bool has_front = false;
    if (iv.begin > 1) {
      const char prev = text[iv.begin - 2];
      const auto at = order.find(prev);
      if (at != std::string::npos) {
        order.erase(at, 1);
        order.insert(order.begin(), prev);
        front = prev;
        has_front = true;
      }
    }
    if (iv.end < n && !free[iv.end + 1]) {
      const char next = text[iv.end];
      const auto at = order.find(next);
      if (at != std::string::npos && !(has_front && next == front)) {
        order.erase(at, 1);
        order.push_back(next);
      }
    }
    write_interval(text, iv, order);
    arrangement.push_back({iv, std::move(order)});
  }
  return realize_arrangement(collection, std::move(arrangement), text, Method::plus);
}

OptimizationResult opt_bwt(const StringCollection& collection) {
  const auto intervals = interesting_intervals(collection);
  std::string text = unify_sentinels(colex_bwt(collection).transform.text);
  const std::size_t n = text.size();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

  std::vector<Arrangement> arrangement;
  std::size_t a = 0;
  while (a < intervals.size()) {
    std::size_t b = a + 1;
    while (b < intervals.size() && intervals[b].begin == intervals[b - 1].end + 1) ++b;

    // Chain intervals[a, b). Layer i holds the best cost for each candidate
    // last symbol of interval i, with the first symbol and predecessor used.
    struct Cell {
      std::size_t cost = kInf;
      char first = 0;
      char prev_last = 0;
    };
    const std::size_t t = b - a;
    std::vector<std::string> sets(t);
    for (std::size_t i = 0; i < t; ++i) sets[i] = distinct_symbols(intervals[a + i].characters);
    std::vector<std::map<char, Cell>> layer(t);

    const std::size_t begin = intervals[a].begin;
    const bool has_left = begin > 1;
    const char left = has_left ? text[begin - 2] : 0;
    for (char l : sets[0]) {
      Cell best;
      for (char f : sets[0]) {
        if (f == l) continue;
        const std::size_t c = sets[0].size() - 1 + (has_left && left != f ? 1 : 0);
        if (c < best.cost) best = {c, f, 0};
      }
      layer[0][l] = best;
    }
    for (std::size_t i = 1; i < t; ++i) {
      for (char l : sets[i]) {
        Cell best;
        for (char f : sets[i]) {
          if (f == l) continue;
          for (char p : sets[i - 1]) {
            const std::size_t c = layer[i - 1][p].cost + sets[i].size() - 1 + (p != f ? 1 : 0);
            if (c < best.cost) best = {c, f, p};
          }
        }
        layer[i][l] = best;
      }
    }
    const std::size_t end = intervals[b - 1].end;
    const bool has_right = end < n;
    const char right = has_right ? text[end] : 0;
    std::size_t best_cost = kInf;
    char last = 0;
    for (char l : sets[t - 1]) {
      const std::size_t c = layer[t - 1][l].cost + (has_right && right != l ? 1 : 0);
      if (c < best_cost) {
        best_cost = c;
        last = l;
      }
    }

    std::vector<std::string> orders(t);
    for (std::size_t i = t; i-- > 0;) {
      const Cell& cell = layer[i][last];
      std::string order(1, cell.first);
      for (char c : sets[i]) {
        if (c != cell.first && c != last) order.push_back(c);
      }
      order.push_back(last);
      orders[i] = std::move(order);
      last = cell.prev_last;
    }
    for (std::size_t i = 0; i < t; ++i) {
      write_interval(text, intervals[a + i], orders[i]);
      arrangement.push_back({intervals[a + i], std::move(orders[i])});
    }
    a = b;
  }
  return realize_arrangement(collection, std::move(arrangement), text, Method::opt);
}

BruteForceResult brute_force_ropt(const StringCollection& collection, std::size_t max_m) {
  if (collection.size() > max_m) {
    throw Error(Errc::guard_exceeded, "m = " + std::to_string(collection.size()) + " exceeds guard " +
                                          std::to_string(max_m));
  }
  BruteForceResult best;
  best.runs = std::numeric_limits<std::size_t>::max();
  Permutation order = identity(collection.size());
  do {
    const std::size_t runs = count_runs(mdol_ebwt(collection.permuted(order)), true);
    if (runs < best.runs) best = {runs, order};
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::size_t concat_runs_floor(const StringCollection& collection, std::size_t max_m) {
  if (collection.size() > max_m) {
    throw Error(Errc::guard_exceeded, "m = " + std::to_string(collection.size()) + " exceeds guard " +
                                          std::to_string(max_m));
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  Permutation order = identity(collection.size());
  do {
    best = std::min(best, count_runs(adapted_concat_bwt(collection.permuted(order)), true));
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

OptimizationResult optimize(Method method, const StringCollection& collection, std::size_t max_m) {
  switch (method) {
    case Method::input: return input_bwt(collection);
    case Method::colex: return colex_bwt(collection);
    case Method::plus: return plus_bwt(collection);
    case Method::opt: return opt_bwt(collection);
    case Method::bruteforce: {
      auto bf = brute_force_ropt(collection, max_m);
      return finish(collection, std::move(bf.order), Method::bruteforce);
    }
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace colbwt
