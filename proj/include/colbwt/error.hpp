#pragma once

#include <stdexcept>
#include <string>

namespace colbwt {

enum class Errc {
  empty_sequence,
  reserved_byte,
  empty_collection,
  malformed_fasta,
  not_primitive,
  non_primitive_input,
  invalid_index_tuple,
  missing_dollar_ranks,
  malformed_transform,
  guard_exceeded,
  variant_not_separator_based,
  invalid_selector,
};

const char* errc_name(Errc code) noexcept;

// Every recoverable failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace colbwt
