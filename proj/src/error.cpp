#include "colbwt/error.hpp"

namespace colbwt {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::empty_sequence: return "EmptySequence";
    case Errc::reserved_byte: return "ReservedByte";
    case Errc::empty_collection: return "EmptyCollection";
    case Errc::malformed_fasta: return "MalformedFasta";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::non_primitive_input: return "NonPrimitiveInput";
    case Errc::invalid_index_tuple: return "InvalidIndexTuple";
    case Errc::missing_dollar_ranks: return "MissingDollarRanks";
    case Errc::malformed_transform: return "MalformedTransform";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::variant_not_separator_based: return "VariantNotSeparatorBased";
    case Errc::invalid_selector: return "InvalidSelector";
  }
  return "Unknown";
}

}  // namespace colbwt
