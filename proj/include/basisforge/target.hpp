#pragma once

#include <map>

#include "basisforge/intset.hpp"

namespace basisforge {

// A prescribed representation count: a nonnegative integer or infinity.
// Infinity is a distinguished symbol, never a large integer; every finite
// count compares below it.
class TargetValue {
 public:
  TargetValue() : v_(0) {}

  static TargetValue finite(Int n);
  static TargetValue infinite() { return TargetValue(kInf); }

  bool is_infinite() const { return v_ == kInf; }
  bool is_zero() const { return v_ == 0; }
  Int finite_count() const;  // throws std::logic_error when infinite

  friend bool operator==(TargetValue a, TargetValue b) { return a.v_ == b.v_; }

  // count-vs-target comparisons
  friend bool operator<(Int c, TargetValue v) {
    return v.is_infinite() || c < v.v_;
  }
  friend bool operator<=(Int c, TargetValue v) {
    return v.is_infinite() || c <= v.v_;
  }
  friend bool operator==(Int c, TargetValue v) {
    return !v.is_infinite() && c == v.v_;
  }
  friend bool operator>(Int c, TargetValue v) { return !(c <= v); }

 private:
  static constexpr Int kInf = -1;
  explicit TargetValue(Int raw) : v_(raw) {}
  Int v_;
};

// f: Z -> N0 ∪ {inf}, represented as a constant default plus finitely many
// overrides. The zero set { n : f(n) = 0 } is the set of override keys mapped
// to 0, which is finite by construction — unless the default itself is 0, in
// which case the function is invalid and rejected by validated().
class TargetFunction {
 public:
  TargetFunction(TargetValue default_value,
                 std::map<Int, TargetValue> overrides);

  // Validation entry point: rejects default 0 (infinite zero set).
  static TargetFunction validated(TargetValue default_value,
                                  std::map<Int, TargetValue> overrides);
  static TargetFunction constant(Int v);  // f ≡ v, validated
  static TargetFunction constant_infinite();

  TargetValue operator()(Int n) const;

  bool is_valid() const { return !default_.is_zero(); }
  const IntegerSet& zero_set() const { return zero_set_; }
  Int delta() const { return static_cast<Int>(zero_set_.size()); }

  // c = 8 + [(delta+1)/2], the window constant of the order-2 construction.
  Int growth_constant() const { return 8 + (delta() + 1) / 2; }

  TargetValue default_value() const { return default_; }
  const std::map<Int, TargetValue>& overrides() const { return overrides_; }

 private:
  TargetValue default_;
  std::map<Int, TargetValue> overrides_;
  IntegerSet zero_set_;
};

}  // namespace basisforge
