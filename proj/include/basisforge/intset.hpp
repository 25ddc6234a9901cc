#pragma once

#include <vector>

#include "basisforge/ints.hpp"

namespace basisforge {

// Finite set of integers kept strictly increasing. Construction sorts and
// deduplicates, so every instance satisfies the invariant by value.
class IntegerSet {
 public:
  IntegerSet() = default;
  explicit IntegerSet(std::vector<Int> values);

  bool contains(Int x) const;
  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  Int min() const;  // nonempty only
  Int max() const;  // nonempty only
  const std::vector<Int>& elements() const { return elems_; }

  std::vector<Int>::const_iterator begin() const { return elems_.begin(); }
  std::vector<Int>::const_iterator end() const { return elems_.end(); }

  bool operator==(const IntegerSet&) const = default;

 private:
  std::vector<Int> elems_;
};

// {a+b : a in A, b in B}
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

// {a-b : a in A, b in B}
IntegerSet difference_set(const IntegerSet& a, const IntegerSet& b);

// {0} - A
IntegerSet negate(const IntegerSet& a);

// Sums of h elements of A: with repetition when unrestricted, pairwise
// distinct when restricted. h >= 1.
IntegerSet h_fold_sumset(const IntegerSet& a, int h, bool restricted);

// A(y, x): number of elements of A in [y, x]; 0 when y > x.
Int counting(const IntegerSet& a, Int y, Int x);

}  // namespace basisforge
