#include "colbwt/order.hpp"

#include <vector>

#include "colbwt/error.hpp"

namespace colbwt {

namespace {

std::strong_ordering byte_order(unsigned char a, unsigned char b) noexcept { return a <=> b; }

}  // namespace

std::strong_ordering lex_compare(std::string_view s, std::string_view t) noexcept {
  const std::size_t n = std::min(s.size(), t.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (s[k] != t[k]) {
      return byte_order(static_cast<unsigned char>(s[k]), static_cast<unsigned char>(t[k]));
    }
  }
  return s.size() <=> t.size();
}

std::strong_ordering colex_compare(std::string_view s, std::string_view t) noexcept {
  std::size_t i = s.size();
  std::size_t j = t.size();
  while (i > 0 && j > 0) {
    --i;
    --j;
    if (s[i] != t[j]) {
      return byte_order(static_cast<unsigned char>(s[i]), static_cast<unsigned char>(t[j]));
    }
  }
  return s.size() <=> t.size();
}

std::strong_ordering omega_compare(std::string_view s, std::string_view t) noexcept {
  if (s == t) return std::strong_ordering::equal;
  // Compare st against ts without building either.
  const std::size_t total = s.size() + t.size();
  auto st = [&](std::size_t k) { return k < s.size() ? s[k] : t[k - s.size()]; };
  auto ts = [&](std::size_t k) { return k < t.size() ? t[k] : s[k - t.size()]; };
  for (std::size_t k = 0; k < total; ++k) {
    const char a = st(k);
    const char b = ts(k);
    if (a != b) return byte_order(static_cast<unsigned char>(a), static_cast<unsigned char>(b));
  }
  // st == ts: same root, so the exponent order is the length order.
  return s.size() <=> t.size();
}

std::size_t primitive_root_length(std::string_view t) {
  const std::size_t n = t.size();
  if (n == 0) return 0;
  std::vector<std::size_t> border(n + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    while (k > 0 && t[i] != t[k]) k = border[k];
    if (t[i] == t[k]) ++k;
    border[i + 1] = k;
  }
  const std::size_t period = n - border[n];
  return n % period == 0 ? period : n;
}

RootDecomposition root_decompose(std::string_view t) {
  const std::size_t p = primitive_root_length(t);
  if (p == 0) return {};
  return {std::string(t.substr(0, p)), t.size() / p};
}

bool is_primitive(std::string_view t) { return !t.empty() && primitive_root_length(t) == t.size(); }

LyndonRotation lyndon_rotation(std::string_view t) {
  if (!is_primitive(t)) throw Error(Errc::not_primitive, "Lyndon rotation needs a primitive string");
  const std::size_t n = t.size();
  auto rotation_less = [&](std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = static_cast<unsigned char>(t[(a + k) % n]);
      const auto y = static_cast<unsigned char>(t[(b + k) % n]);
      if (x != y) return x < y;
    }
    return false;
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (rotation_less(i, best)) best = i;
  }
  std::string rotation;
  rotation.reserve(n);
  rotation.append(t.substr(best));
  rotation.append(t.substr(0, best));
  return {std::move(rotation), best + 1};
}

}  // namespace colbwt
