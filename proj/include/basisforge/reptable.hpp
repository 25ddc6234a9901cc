#pragma once

#include <unordered_map>
#include <vector>

#include "basisforge/intset.hpp"

namespace basisforge {

// Representation counts of a set over an inclusive window of sums. Sums that
// land outside the window are ignored.
struct RepTable {
  int order = 2;
  bool restricted = false;
  Int lo = 0;
  Int hi = -1;
  std::vector<Int> counts;  // counts[n - lo]

  Int at(Int n) const;  // throws std::out_of_range outside [lo, hi]
  Int total() const;
};

// Number of non-decreasing (strictly increasing when restricted) h-tuples
// from A summing to n. Plain tuple enumeration pruned only by sortedness.
// This is the trusted oracle every construction module is audited against.
Int rep_count(const IntegerSet& a, int h, bool restricted, Int n);

// One pass over all tuples, accumulating every sum that falls in [lo, hi].
RepTable rep_table(const IntegerSet& a, int h, bool restricted, Int lo, Int hi);

// Batch form without a window: every sum with a nonzero count, one pass over
// the same tuples rep_count enumerates.
std::unordered_map<Int, Int> rep_map(const IntegerSet& a, int h,
                                     bool restricted);

}  // namespace basisforge
