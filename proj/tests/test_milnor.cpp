#include "doctest.h"

#include <algorithm>

#include "npcoh/milnor.hpp"
#include "npcoh/normal_forms.hpp"
#include "npcoh/parse.hpp"

using namespace npcoh;

namespace {

Polynomial poly(const std::string& s, int n) {
  return parse_polynomial(s, default_variable_names(n));
}

std::vector<std::string> basis_strings(const MilnorAlgebra& alg, int n) {
  std::vector<std::string> out;
  auto names = default_variable_names(n);
  for (const auto& m : alg.basis)
    out.push_back(print_polynomial(Polynomial::term(m, Rational(1)), names));
  return out;
}

}  // namespace

TEST_CASE("cusp quotient algebra") {
  WeightSystem w{{2, 3, 3}};
  auto alg = milnor_algebra(poly("x1^3+x2^2+x3^2", 3), w);
  CHECK(alg.N == 6);
  CHECK(alg.codimension == 2);
  CHECK(basis_strings(alg, 3) == std::vector<std::string>({"1", "x1"}));
  CHECK(alg.basis_degrees(w) == std::vector<long>({0, 2}));
  CHECK(alg.basis_count_at_degree(w, 0) == 1);
  CHECK(alg.basis_count_at_degree(w, 2) == 1);
  CHECK(alg.basis_count_at_degree(w, 1) == 0);
  CHECK(alg.socle_bound == (6 - 4) + (6 - 6) + (6 - 6));
}

TEST_CASE("quotient basis of the index-5 D germ") {
  auto nf = standard_polynomial(parse_class_label("D5", 4));
  auto alg = milnor_algebra(nf.f, nf.weights);
  CHECK(alg.N == 8);
  CHECK(alg.codimension == 5);
  // Ascending by (quasidegree, term order): degrees 0, 2, 3, 4, 6.
  CHECK(basis_strings(alg, 4) ==
        std::vector<std::string>({"1", "x2", "x1", "x2^2", "x2^3"}));
  CHECK(alg.basis_degrees(nf.weights) == std::vector<long>({0, 2, 3, 4, 6}));
}

TEST_CASE("ideal slices complement the quotient degreewise") {
  WeightSystem unit{{1, 1, 1}};
  auto quad = poly("x1^2+x2^2+x3^2", 3);
  // The gradient ideal of the quadric already contains every linear form.
  CHECK(ideal_slice_dimension(unit, jacobian(quad), 1) == 3);
  WeightSystem w{{2, 3, 3}};
  auto cusp = poly("x1^3+x2^2+x3^2", 3);
  CHECK(ideal_slice_dimension(w, jacobian(cusp), 2) == 0);  // x1 survives
  CHECK(ideal_slice_dimension(w, jacobian(cusp), 3) == 2);  // x2, x3 die
}

TEST_CASE("product oracle matches elimination for the catalog") {
  for (int n = 3; n <= 4; ++n) {
    for (auto fam :
         {Family::A, Family::D, Family::E, Family::Regular, Family::Quadratic}) {
      for (auto& nf : catalog_sweep(n, n, {fam}, 5)) {
        auto alg = milnor_algebra(nf.f, nf.weights);
        CHECK(Rational(alg.codimension) ==
              milnor_number_oracle(nf.weights, nf.degree));
        CHECK(alg.codimension == nf.milnor);
      }
    }
  }
}

TEST_CASE("poincare series expansion matches per-degree counts") {
  auto check_poincare = [](const Polynomial& f, const WeightSystem& w) {
    auto alg = milnor_algebra(f, w);
    auto dims = poincare_dimensions(w, alg.N);
    long total = 0;
    for (size_t d = 0; d < dims.size(); ++d) {
      CHECK(dims[d] == alg.basis_count_at_degree(w, static_cast<long>(d)));
      total += dims[d];
    }
    CHECK(total == alg.codimension);
    for (long d : alg.basis_degrees(w))
      CHECK(static_cast<size_t>(d) < dims.size());
  };
  check_poincare(poly("x1^3+x2^2+x3^2", 3), WeightSystem{{2, 3, 3}});
  auto d5 = standard_polynomial(parse_class_label("D5", 4));
  check_poincare(d5.f, d5.weights);
}

TEST_CASE("cusp poincare profile") {
  auto dims = poincare_dimensions(WeightSystem{{2, 3, 3}}, 6);
  CHECK(dims == std::vector<long>({1, 0, 1}));
}

TEST_CASE("E-family quotient degrees") {
  auto e6 = standard_polynomial(parse_class_label("E6", 3));
  auto a6 = milnor_algebra(e6.f, e6.weights);
  CHECK(a6.codimension == 6);
  CHECK(a6.basis_degrees(e6.weights) ==
        std::vector<long>({0, 3, 4, 6, 7, 10}));
  auto e8 = standard_polynomial(parse_class_label("E8", 3));
  auto a8 = milnor_algebra(e8.f, e8.weights);
  CHECK(a8.codimension == 8);
  CHECK(a8.basis_degrees(e8.weights) ==
        std::vector<long>({0, 6, 10, 12, 16, 18, 22, 28}));
}

TEST_CASE("infinite codimension is detected") {
  WeightSystem w{{1, 1, 1}};
  CHECK_THROWS_AS(milnor_algebra(poly("x1^2*x2", 3), w),
                  InfiniteCodimensionError);
}

TEST_CASE("non-quasihomogeneous input is rejected") {
  WeightSystem w{{1, 1, 1}};
  CHECK_THROWS_AS(milnor_algebra(poly("x1^3+x2^2+x3^2", 3), w), InputError);
}

TEST_CASE("smooth germ has codimension zero") {
  WeightSystem w{{1, 1, 1}};
  auto alg = milnor_algebra(poly("x1", 3), w);
  CHECK(alg.codimension == 0);
  CHECK(alg.basis.empty());
}

TEST_CASE("count vector splits quotient dimensions by level") {
  auto d5 = standard_polynomial(parse_class_label("D5", 4));
  auto alg = milnor_algebra(d5.f, d5.weights);
  // N = 8, sum(w) = 13. r_2 counts quotient monomials of degree 3 (x1),
  // r_3 those of degree 11 (none); s counts ring monomials of degree -5.
  auto cv = count_vector(d5.weights, alg, 4);
  CHECK(cv.r.at(2) == 1);
  CHECK(cv.r.at(3) == 0);
  CHECK(cv.s == 0);
  CHECK(cv.r_total() == 1);

  WeightSystem wc{{1, 1, 1}};
  auto algc = milnor_algebra(poly("x1^3+x2^3+x3^3", 3), wc);
  auto cvc = count_vector(wc, algc, 2);
  CHECK(cvc.r.empty());
  CHECK(cvc.s == 1);  // the constants sit in degree N - sum(w) = 0
  CHECK(cvc.r_total() == 0);
}

TEST_CASE("quotient data is stable under variable permutation") {
  WeightSystem w1{{2, 3, 3}};
  WeightSystem w2{{3, 2, 3}};
  auto a = milnor_algebra(poly("x1^3+x2^2+x3^2", 3), w1);
  auto b = milnor_algebra(poly("x2^3+x1^2+x3^2", 3), w2);
  CHECK(a.codimension == b.codimension);
  auto da = a.basis_degrees(w1);
  auto db = b.basis_degrees(w2);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  CHECK(da == db);
}

TEST_CASE("quotient data is stable under sign flips") {
  WeightSystem w{{2, 3, 3}};
  auto a = milnor_algebra(poly("x1^3+x2^2+x3^2", 3), w);
  auto b = milnor_algebra(poly("x1^3-x2^2+x3^2", 3), w);
  CHECK(a.codimension == b.codimension);
  CHECK(a.basis_degrees(w) == b.basis_degrees(w));
}
