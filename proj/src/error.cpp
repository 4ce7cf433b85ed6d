#include "dyck/error.hpp"

namespace dyck {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::empty_word: return "EmptyWord";
    case Errc::not_dyck: return "NotDyck";
    case Errc::bad_counts: return "BadCounts";
    case Errc::bad_shape: return "BadShape";
    case Errc::no_leaves: return "NoLeaves";
    case Errc::bad_marking: return "BadMarking";
    case Errc::bad_profile: return "BadProfile";
    case Errc::not_real_rooted: return "NotRealRooted";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::decomposition_bug: return "DecompositionBug";
    case Errc::inexact_division: return "InexactDivision";
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace dyck
