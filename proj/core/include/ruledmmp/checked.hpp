#pragma once

#include <cstdint>

#include "ruledmmp/errors.hpp"

namespace ruledmmp {

// All lattice arithmetic is exact 64-bit with overflow detection.
// Any overflow aborts the computation by throwing Error(errc::integer_overflow).

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(errc::integer_overflow, "add");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(errc::integer_overflow, "sub");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(errc::integer_overflow, "mul");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

}  // namespace ruledmmp
