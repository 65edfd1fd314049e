#include "doctest.h"
#include "npcoh/grading.hpp"
#include "npcoh/parse.hpp"

using namespace npcoh;

namespace {
const WeightSystem kUnit{{1, 1, 1}};
const WeightSystem kA2{{2, 3, 3}};
const std::vector<std::string> kXyz = {"x1", "x2", "x3"};
}

TEST_CASE("weight validation") {
  WeightSystem zero{{1, 0, 1}};
  WeightSystem negative{{-2, 1, 1}};
  CHECK_THROWS_AS(zero.validate(), InputError);
  CHECK_THROWS_AS(negative.validate(), InputError);
  CHECK_NOTHROW(kA2.validate());
  CHECK(kA2.sum() == 8);
}

TEST_CASE("quasidegree of monomials") {
  CHECK(quasidegree(kA2, Monomial{3, 0, 0}) == 6);
  CHECK(quasidegree(kA2, Monomial{1, 1, 0}) == 5);
  CHECK(quasidegree(kA2, Monomial{0, 0, 0}) == 0);
}

TEST_CASE("quasihomogeneous degree detection") {
  Polynomial f = parse_polynomial("x1^3+x2^2+x3^2", kXyz);
  CHECK(quasihomogeneous_degree(kA2, f) == 6);
  Polynomial mixed = parse_polynomial("x1^2+x1^3", kXyz);
  CHECK(!quasihomogeneous_degree(kUnit, mixed).has_value());
  CHECK(!quasihomogeneous_degree(kUnit, Polynomial(3)).has_value());
}

TEST_CASE("monomial slice enumeration") {
  auto mons = monomials_of_degree(kUnit, 2);
  CHECK(mons.size() == 6);
  CHECK(count_monomials_of_degree(kUnit, 2) == 6);
  // Descending lex: x1^2 first, x3^2 last.
  CHECK(mons.front() == Monomial{2, 0, 0});
  CHECK(mons.back() == Monomial{0, 0, 2});
  for (size_t i = 0; i + 1 < mons.size(); ++i)
    CHECK(Monomial::cmp(mons[i], mons[i + 1]) > 0);
  for (const Monomial& m : mons) CHECK(quasidegree(kUnit, m) == 2);

  CHECK(monomials_of_degree(kA2, 1).empty());
  CHECK(count_monomials_of_degree(kA2, 1) == 0);
  CHECK(count_monomials_of_degree(kA2, 6) ==
        static_cast<long>(monomials_of_degree(kA2, 6).size()));
  CHECK(monomials_of_degree(kUnit, 0).size() == 1);
  CHECK(monomials_of_degree(kUnit, -1).empty());
}

TEST_CASE("slice counts agree with enumeration on a weighted system") {
  WeightSystem W{{3, 2, 4, 4}};
  for (long d = 0; d <= 40; ++d)
    CHECK(count_monomials_of_degree(W, d) ==
          static_cast<long>(monomials_of_degree(W, d).size()));
}

TEST_CASE("euler field acts per term by quasidegree") {
  Polynomial g = parse_polynomial("x1*x2", kXyz);
  CHECK(euler_apply(kA2, g) == g.scaled(Rational(5)));
  Polynomial f = parse_polynomial("x1^3+x2^2+x3^2", kXyz);
  CHECK(euler_apply(kA2, f) == f.scaled(Rational(6)));
  CHECK(euler_apply(kA2, Polynomial(3)).is_zero());
}

TEST_CASE("homotopy solve divides by degree minus p") {
  Polynomial g = parse_polynomial("x1^3", kXyz);
  Polynomial h = homotopy_solve(kUnit, 1, g);
  CHECK(h == g.scaled(Rational(1, 2)));
  // Round trip: W.h - p*h = g.
  CHECK(euler_apply(kUnit, h) - h.scaled(Rational(1)) == g);
}

TEST_CASE("homotopy solve round trips on mixed-degree input") {
  Polynomial g = parse_polynomial("x1^3+5*x2^2*x3-7", kXyz);
  long p = 2;
  Polynomial h = homotopy_solve(kUnit, p, g);
  CHECK(euler_apply(kUnit, h) - h.scaled(Rational(p)) == g);
}

TEST_CASE("homotopy resonance raises") {
  Polynomial g = parse_polynomial("x1^3+x2", kXyz);
  CHECK_THROWS_AS(homotopy_solve(kUnit, 3, g), ResonanceError);
  try {
    homotopy_solve(kUnit, 3, g);
  } catch (const ResonanceError& e) {
    CHECK(e.degree == 3);
  }
}
