#pragma once

#include <stdexcept>
#include <string>

namespace wnlie {

enum class errc {
  parse_error,
  dimension_mismatch,
  param_mismatch,
  division_by_zero,
  domain_error,
  not_invertible,
  degree_bound_exceeded,
  unstable_truncation,
  verification_failure,
  bad_argument,
  internal_error,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw error(code, msg);
}

}  // namespace wnlie
