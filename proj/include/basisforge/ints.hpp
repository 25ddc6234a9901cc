#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace basisforge {

using Int = std::int64_t;

// All arithmetic on set elements is overflow-checked. The library's value is
// exact bookkeeping, so wraparound must surface as an error, never as a
// silently wrong count.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow: " + std::to_string(a) +
                              " + " + std::to_string(b));
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow: " + std::to_string(a) +
                              " - " + std::to_string(b));
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow: " + std::to_string(a) +
                              " * " + std::to_string(b));
  }
  return r;
}

Int checked_pow(Int base, int exp);

Int checked_abs(Int a);

// Exact binomial coefficient; 0 when k < 0 or k > n.
Int binomial(Int n, Int k);

}  // namespace basisforge
