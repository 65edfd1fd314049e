#pragma once

#include <map>
#include <string>
#include <vector>

#include "npcoh/forms.hpp"
#include "npcoh/milnor.hpp"

namespace npcoh {

enum class DimKind { finite, infinite, sentinel };

// One cohomology space H^k of a twisted complex, as the dimension theorems
// describe it: an exact dimension with explicit generator cocycles and their
// degree placement, an infinite-dimensional diagnosis, or a sentinel for the
// (k, p) combinations the theorems do not cover.
struct ClosedEntry {
  int k = 0;
  DimKind kind = DimKind::sentinel;
  long dim = 0;                             // finite only
  std::vector<DifferentialForm> generators; // finite; for the infinite
                                            // (k=n-1, q=2) case: the finite
                                            // direct summand h*sigma
  std::map<long, long> placement;           // quasidegree -> dimension
  std::string note;
};

struct ClosedReport {
  long p = 0;
  long q = 0;  // n - p
  std::vector<ClosedEntry> entries;  // k = 0..n

  const ClosedEntry& at(int k) const { return entries.at(k); }
};

// Dimensions, generators, and degree placement for H^0..H^n of the twisted
// complex with parameter p, from the quasihomogeneous dimension theorems.
ClosedReport closed_form_report(const Polynomial& f, const WeightSystem& W,
                                const MilnorAlgebra& Q, long p);

}  // namespace npcoh
