#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dyck {

enum class Errc {
  empty_word,
  not_dyck,
  bad_counts,
  bad_shape,
  no_leaves,
  bad_marking,
  bad_profile,
  not_real_rooted,
  not_symmetric,
  decomposition_bug,
  inexact_division,
  order_mismatch,
  zero_polynomial,
  invalid_argument,
  parse_error,
};

std::string_view errc_name(Errc code);

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dyck
