#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "npcoh/scalar.hpp"

namespace npcoh {

// Sparse integer row: (column, value) pairs sorted by column, values nonzero.
struct SparseRow {
  std::vector<std::pair<int, Integer>> ent;

  bool empty() const { return ent.empty(); }
  int lead_col() const { return ent.front().first; }
  const Integer& lead_val() const { return ent.front().second; }
  void push(int col, Integer v) { ent.emplace_back(col, std::move(v)); }
};

// r <- a*r + b*s, merged by column; zero results dropped.
SparseRow row_combine(const Integer& a, const SparseRow& r, const Integer& b,
                      const SparseRow& s);

// Divide by the gcd of all entries and make the leading entry positive.
// Exact row scaling; preserves rank, kernels, and solution sets.
void row_normalize(SparseRow& r);

// Convert a rational vector to a primitive integer row (clear denominators,
// leading entry positive). When scale is non-null it receives the exact
// nonzero factor with row = scale * v, so callers that interpret
// Eliminator dependencies can translate them back to the original vectors.
SparseRow row_from_rationals(const std::vector<std::pair<int, Rational>>& v,
                             Rational* scale = nullptr);

// Incremental fraction-free Gaussian elimination. Rows arrive one at a time
// in a caller-fixed order and are reduced against the pivots accumulated so
// far; a surviving row contributes its leading column as a new pivot
// (deterministic first-nonzero pivoting in insertion order). All arithmetic
// is exact; rows are kept primitive after every combination step.
//
// With multiplier tracking on, every row is silently augmented with an
// identity column, so a row that reduces to zero yields an exact integer
// dependency on the previously inserted rows (a kernel vector of the matrix
// whose rows were inserted).
class Eliminator {
 public:
  explicit Eliminator(bool track_multipliers = false)
      : track_(track_multipliers) {}

  // Returns the pivot column (>= 0) or -1 when the row reduced to zero.
  // When tracking, a zeroed row stores its dependency for retrieval via
  // last_dependency().
  int add_row(SparseRow r);

  long rank() const { return static_cast<long>(rows_.size()); }
  int rows_added() const { return added_; }

  // Dependency of the most recent zero row: coefficients over insertion
  // indices 0..added-1 (the entry for the zeroed row itself included).
  // Primitive integer vector; meaningful only directly after add_row == -1.
  const std::vector<std::pair<int, Integer>>& last_dependency() const {
    return last_dep_;
  }

 private:
  static constexpr int kMultBase = 1 << 28;  // multiplier columns live here

  bool track_;
  int added_ = 0;
  std::vector<SparseRow> rows_;                 // echelon rows
  std::unordered_map<int, int> pivot_row_;      // lead col -> index in rows_
  std::vector<std::pair<int, Integer>> last_dep_;
};

}  // namespace npcoh
