#pragma once

#include <string>
#include <vector>

#include "npcoh/grading.hpp"
#include "npcoh/polynomial.hpp"

namespace npcoh {

enum class Family { A, D, E, Regular, Quadratic };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// A_k (k >= 1), D_k (k >= 4), E_k (k in {6,7,8}), plus the regular germ x1
// and the nondegenerate quadratic. The class is stabilized to n variables
// (n >= 3) by appending squares. signs[i] multiplies the (i+1)-th written
// term; the leading term is always +1.
struct SingularityClass {
  Family family = Family::A;
  int index = 0;  // the k of A_k / D_k / E_k; ignored for Regular/Quadratic
  int n = 3;
  std::vector<int> signs;  // one entry per written term after the first

  std::string label() const;
};

struct NormalForm {
  SingularityClass cls;
  Polynomial f;
  WeightSystem weights;
  long degree = 0;  // common quasidegree N
  long milnor = 0;  // expected codimension
};

NormalForm standard_polynomial(const SingularityClass& cls);

// "A2", "D5", "E7", "regular", "quadratic" -> class with default signs.
SingularityClass parse_class_label(const std::string& label, int n);

// Every class with index <= kmax for the requested families, over
// n in [n_lo, n_hi], default signs, deduplicated by (n, weights, polynomial)
// keeping the earliest family in enumeration order A, D, E, Regular,
// Quadratic.
std::vector<NormalForm> catalog_sweep(int n_lo, int n_hi,
                                      const std::vector<Family>& families,
                                      int kmax);

}  // namespace npcoh
