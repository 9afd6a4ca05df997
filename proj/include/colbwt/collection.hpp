#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace colbwt {

// Reserved sentinel bytes. Ordering: hash < dollar < every alphabet byte.
inline constexpr unsigned char kHash = 0x00;
inline constexpr unsigned char kDollar = 0x01;

inline constexpr char kHashGlyph = '#';
inline constexpr char kDollarGlyph = '$';

inline constexpr bool is_sentinel(unsigned char c) noexcept { return c == kHash || c == kDollar; }

// A permutation of string indices, 1-based: order[k] is the index of the
// string placed at position k+1.
using Permutation = std::vector<std::size_t>;

// Ordered multiset of nonempty byte strings. Construction validates every
// item; the object is immutable afterwards.
class StringCollection {
 public:
  explicit StringCollection(std::vector<std::string> items, std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return items_.size(); }
  // 0-based access; the (d, i) pairs elsewhere are 1-based.
  const std::string& operator[](std::size_t index) const { return items_[index]; }
  const std::vector<std::string>& items() const noexcept { return items_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  // Distinct bytes used, ascending.
  const std::vector<unsigned char>& alphabet() const noexcept { return alphabet_; }
  std::size_t total_length() const noexcept { return total_length_; }

  StringCollection permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const StringCollection& a, const StringCollection& b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<std::string> items_;
  std::vector<std::string> labels_;
  std::vector<unsigned char> alphabet_;
  std::size_t total_length_ = 0;
};

// One sequence per line, LF or CRLF terminated.
StringCollection ingest_lines(std::string_view text);

// FASTA: '>' header lines followed by one or more sequence lines.
StringCollection ingest_fasta(std::string_view text);

// Inverse of ingest_lines.
std::string to_lines(const StringCollection& collection);

bool is_permutation_of_range(std::span<const std::size_t> order, std::size_t m);

}  // namespace colbwt
