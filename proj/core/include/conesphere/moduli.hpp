#pragma once

#include <vector>

#include "conesphere/eisenstein.hpp"
#include "conesphere/triangulation.hpp"

namespace conesphere {

// Multiset of cone deficits in units of pi, stored sorted ascending.
// Valid lists have every entry in the open interval (0, 2) and sum exactly 4.
struct DeficitList {
  std::vector<BigRat> deficits;

  // validates and sorts; throws Error on an invalid list
  static DeficitList from_values(std::vector<BigRat> values);
  // one entry (6-k)/3 per vertex of degree k < 6; throws
  // NotCombinatoriallyPositive when some degree exceeds 6
  static DeficitList from_triangulation(const Triangulation& t);

  int size() const { return int(deficits.size()); }
  friend bool operator==(const DeficitList&, const DeficitList&) = default;
};

// Disjoint index subsets of a DeficitList marked for coalescing.
struct MultiList {
  std::vector<std::vector<int>> subsets;
};

enum class PairClass {
  satisfied,            // ratio 2/(2 - di - dj) is a positive integer
  violated,             // it is not
  covered_by_condition2 // equal pair, deferred to the second condition
};

// One pair with deficit sum below 2; ratio = 2/(2 - di - dj).
struct PairReport {
  int i{0};
  int j{0};
  BigRat ratio;
  PairClass cls{PairClass::satisfied};
};

// One equal pair with common deficit below 1; ratio = 2/(1 - di).
struct EqualPairReport {
  int i{0};
  int j{0};
  BigRat ratio;
  bool satisfied{false};
};

// First lattice condition: every pair of deficits summing below 2 must have
// 2/(2 - di - dj) a positive integer. Equal pairs are classified as covered
// and deferred to the second condition. classify_* return every examined
// pair; check_* return only the violations.
std::vector<PairReport> classify_condition1(const DeficitList& d);
std::vector<PairReport> check_condition1(const DeficitList& d);

// Second lattice condition: every equal pair with common deficit below 1
// must have 2/(1 - di) a positive integer.
std::vector<EqualPairReport> classify_condition2(const DeficitList& d);
std::vector<EqualPairReport> check_condition2(const DeficitList& d);

// Necessary test for the list to come from a triangulation: every deficit is
// k/3 with k in 1..5. Realizability itself is decided by exhibiting a
// triangulation.
bool is_special(const DeficitList& d);

struct CoalesceResult {
  DeficitList list;
  int codimension{0};  // number of cone points removed, sum of (|S_i| - 1)
};

// Merge each subset of cone points into one whose deficit is the subset sum.
// Throws InvalidMultiList when subsets overlap, an index is out of range, or
// a merged deficit leaves (0, 2).
CoalesceResult coalesce(const DeficitList& d, const MultiList& m);

}  // namespace conesphere
