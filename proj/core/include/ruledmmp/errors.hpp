#pragma once

#include <stdexcept>
#include <string>

namespace ruledmmp {

enum class errc {
  dimension_mismatch,
  integer_overflow,
  non_curve_class,
  not_minus_one_curve,
  horizontal_component,
  unknown_component,
  dead_component,
  unknown_fiber,
  invalid_parameter,
  validation_failed,
  reducible_horizontal,
  irreducible_horizontal,
  plan_mismatch,
  inconsistent_state,
  unknown_check,
  parse_error,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace ruledmmp
