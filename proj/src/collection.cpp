#include "colbwt/collection.hpp"

#include <algorithm>
#include <array>

#include "colbwt/error.hpp"

namespace colbwt {

namespace {

void validate(const std::string& item, std::size_t index) {
  if (item.empty()) {
    throw Error(Errc::empty_sequence, "sequence " + std::to_string(index + 1) + " is empty");
  }
  for (unsigned char c : item) {
    if (is_sentinel(c)) {
      throw Error(Errc::reserved_byte,
                  "sequence " + std::to_string(index + 1) + " contains a reserved sentinel byte");
    }
  }
}

// Splits on '\n', dropping one trailing '\r' per line. A final terminator does
// not open a new line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

}  // namespace

StringCollection::StringCollection(std::vector<std::string> items, std::vector<std::string> labels)
    : items_(std::move(items)), labels_(std::move(labels)) {
  if (items_.empty()) throw Error(Errc::empty_collection, "collection has no sequences");
  std::array<bool, 256> seen{};
  for (std::size_t d = 0; d < items_.size(); ++d) {
    validate(items_[d], d);
    total_length_ += items_[d].size();
    for (unsigned char c : items_[d]) seen[c] = true;
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c]) alphabet_.push_back(static_cast<unsigned char>(c));
  }
  if (!labels_.empty() && labels_.size() != items_.size()) labels_.clear();
}

StringCollection StringCollection::permuted(std::span<const std::size_t> order) const {
  if (!is_permutation_of_range(order, size())) {
    throw Error(Errc::invalid_selector, "order is not a permutation of 1..m");
  }
  std::vector<std::string> items;
  std::vector<std::string> labels;
  items.reserve(order.size());
  for (std::size_t d : order) {
    items.push_back(items_[d - 1]);
    if (!labels_.empty()) labels.push_back(labels_[d - 1]);
  }
  return StringCollection(std::move(items), std::move(labels));
}

bool is_permutation_of_range(std::span<const std::size_t> order, std::size_t m) {
  if (order.size() != m) return false;
  std::vector<bool> seen(m + 1, false);
  for (std::size_t d : order) {
    if (d < 1 || d > m || seen[d]) return false;
    seen[d] = true;
  }
  return true;
}

StringCollection ingest_lines(std::string_view text) {
  std::vector<std::string> items;
  for (std::string_view line : split_lines(text)) items.emplace_back(line);
  return StringCollection(std::move(items));
}

StringCollection ingest_fasta(std::string_view text) {
  std::vector<std::string> items;
  std::vector<std::string> labels;
  for (std::string_view line : split_lines(text)) {
    if (!line.empty() && line.front() == '>') {
      labels.emplace_back(line.substr(1));
      items.emplace_back();
      continue;
    }
    if (line.empty()) continue;
    if (items.empty()) throw Error(Errc::malformed_fasta, "sequence data before the first header");
    items.back().append(line);
  }
  for (std::size_t d = 0; d < items.size(); ++d) {
    if (items[d].empty()) {
      throw Error(Errc::empty_sequence, "record '" + labels[d] + "' has no sequence");
    }
  }
  return StringCollection(std::move(items), std::move(labels));
}

std::string to_lines(const StringCollection& collection) {
  std::string out;
  out.reserve(collection.total_length() + collection.size());
  for (const auto& item : collection.items()) {
    out += item;
    out += '\n';
  }
  return out;
}

}  // namespace colbwt
