#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/intervals.hpp"
#include "colbwt/transform.hpp"

namespace colbwt {

enum class Method { input, colex, plus, opt, bruteforce };

std::string_view method_name(Method m) noexcept;

// Symbol order chosen for one interesting interval: each symbol once, in the
// order its run appears.
struct Arrangement {
  SapInterval interval;
  std::string order;
};

struct OptimizationResult {
  Transform transform;        // mdol_ebwt of the witness order
  std::size_t runs = 0;       // dollars equal
  Permutation order;          // witness, 1-based
  std::vector<Arrangement> arrangement;  // plus / opt only
  Method method = Method::input;
};

inline constexpr std::size_t kDefaultGuard = 7;

// Per-suffix group orders, keyed by the shared suffix U. Suffixes without an
// entry fall back to byte order, which gives colex order.
using GroupOrders = std::map<std::string, std::string, std::less<>>;

// Stable sort of the string indices realizing the given group orders.
Permutation realize(const StringCollection& collection, const GroupOrders& orders);

OptimizationResult input_bwt(const StringCollection& collection);
OptimizationResult colex_bwt(const StringCollection& collection);
OptimizationResult plus_bwt(const StringCollection& collection);
OptimizationResult opt_bwt(const StringCollection& collection);

struct BruteForceResult {
  std::size_t runs = 0;
  Permutation order;  // lexicographically smallest argmin
};

BruteForceResult brute_force_ropt(const StringCollection& collection, std::size_t max_m = kDefaultGuard);

std::size_t concat_runs_floor(const StringCollection& collection, std::size_t max_m = kDefaultGuard);

OptimizationResult optimize(Method method, const StringCollection& collection,
                            std::size_t max_m = kDefaultGuard);

}  // namespace colbwt
