#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colbwt/collection.hpp"
#include "colbwt/transform.hpp"

namespace colbwt {

// A block of mdolEBWT positions whose suffixes are all equal to U$.
struct SapInterval {
  std::size_t begin = 0;  // 1-based, inclusive
  std::size_t end = 0;
  std::string suffix;      // U, empty for the first block
  std::string characters;  // preceding symbols, sorted; kDollar when U is a whole string
};

using InterestingInterval = SapInterval;

struct Run {
  char symbol = 0;
  std::size_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

struct RunLengthEncoding {
  std::vector<Run> runs;
  std::size_t total_length = 0;
};

std::vector<SapInterval> compute_sap_intervals(const StringCollection& collection);

// With dollars_equal = false, an interval preceded only by two or more
// (necessarily distinct) dollars also counts as interesting.
bool is_interesting(const SapInterval& interval, bool dollars_equal = true);

std::vector<InterestingInterval> interesting_intervals(const StringCollection& collection,
                                                       bool dollars_equal = true);

std::size_t count_runs(std::string_view text);
std::size_t count_runs(const Transform& t, bool dollars_equal = true);

RunLengthEncoding rle(std::string_view text);
std::string rle_decode(const RunLengthEncoding& encoding);

bool pairwise_disjoint(const std::vector<SapInterval>& intervals);

// Interval containing the 1-based position, if any.
std::optional<SapInterval> enclosing(const std::vector<SapInterval>& intervals, std::size_t pos);

// "begin end suffix chars" per line, "-" for the empty suffix.
std::string format_interval(const SapInterval& interval);

}  // namespace colbwt
