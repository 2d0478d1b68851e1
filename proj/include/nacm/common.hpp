#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nacm {

// All degree/multiplicity arithmetic is 64-bit with overflow detection.
// Degrees only grow additively under the operations here, so the few
// products (degree formulas, binomial bounds) go through checked helpers.
using Int = std::int64_t;

/// Invalid user-supplied data. The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A failed internal cross-assertion. The CLI maps this to exit code 1.
class defect_error : public std::logic_error {
public:
  explicit defect_error(const std::string& what) : std::logic_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw input_error("integer overflow in addition");
  return out;
}

inline Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw input_error("integer overflow in multiplication");
  return out;
}

}  // namespace nacm
