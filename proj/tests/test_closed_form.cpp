#include "doctest.h"

#include "npcoh/closed_form.hpp"
#include "npcoh/normal_forms.hpp"
#include "npcoh/parse.hpp"

using namespace npcoh;

namespace {

Polynomial poly(const std::string& s, int n) {
  return parse_polynomial(s, default_variable_names(n));
}

struct Setup {
  Polynomial f;
  WeightSystem W;
  MilnorAlgebra Q;
};

Setup setup(const std::string& label, int n) {
  auto nf = standard_polynomial(parse_class_label(label, n));
  return {nf.f, nf.weights, milnor_algebra(nf.f, nf.weights)};
}

std::vector<long> finite_dims(const ClosedReport& rep) {
  std::vector<long> out;
  for (const auto& e : rep.entries)
    out.push_back(e.kind == DimKind::finite ? e.dim : -1);
  return out;
}

long placement_total(const ClosedEntry& e) {
  long t = 0;
  for (const auto& [m, d] : e.placement) t += d;
  return t;
}

}  // namespace

TEST_CASE("cusp dimensions with explicit generators") {
  auto s = setup("A2", 3);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  CHECK(rep.q == 3);
  REQUIRE(rep.entries.size() == 4);
  CHECK(finite_dims(rep) == std::vector<long>({1, 1, 0, 2}));

  const auto& h0 = rep.at(0);
  REQUIRE(h0.generators.size() == 1);
  CHECK(h0.generators[0] ==
        DifferentialForm::from_polynomial(Polynomial::constant(3, Rational(1))));
  CHECK(h0.placement == std::map<long, long>({{0, 1}}));

  const auto& h1 = rep.at(1);
  REQUIRE(h1.generators.size() == 1);
  CHECK(h1.generators[0] == gradient_form(s.f));
  CHECK(h1.placement == std::map<long, long>({{6, 1}}));

  CHECK(rep.at(2).generators.empty());
  CHECK(rep.at(2).placement.empty());

  const auto& h3 = rep.at(3);
  REQUIRE(h3.generators.size() == 2);
  CHECK(h3.generators[0] == volume_form(3));
  CHECK(h3.generators[1] == volume_form(3).scaled(Polynomial::variable(3, 0)));
  CHECK(h3.placement == std::map<long, long>({{8, 1}, {10, 1}}));
}

TEST_CASE("negative p shifts the ground class to a power of f") {
  auto s = setup("A2", 3);
  auto rep = closed_form_report(s.f, s.W, s.Q, -2);
  const auto& h0 = rep.at(0);
  CHECK(h0.kind == DimKind::finite);
  CHECK(h0.dim == 1);
  REQUIRE(h0.generators.size() == 1);
  CHECK(h0.generators[0] == DifferentialForm::from_polynomial(s.f * s.f));
  CHECK(h0.placement == std::map<long, long>({{12, 1}}));
  CHECK(rep.at(1).kind == DimKind::sentinel);
}

TEST_CASE("positive p kills the ground degree") {
  auto s = setup("A2", 3);
  CHECK(closed_form_report(s.f, s.W, s.Q, 2).at(0).dim == 0);
}

TEST_CASE("morse point in three variables") {
  auto s = setup("A1", 3);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  CHECK(finite_dims(rep) == std::vector<long>({1, 1, 0, 1}));
  CHECK(rep.at(3).generators.size() == 1);
  CHECK(rep.at(3).generators[0] == volume_form(3));
  CHECK(rep.at(3).placement == std::map<long, long>({{3, 1}}));
}

TEST_CASE("regular germ has the gradient class only") {
  auto s = setup("regular", 3);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  CHECK(finite_dims(rep) == std::vector<long>({1, 1, 0, 0}));
  REQUIRE(rep.at(1).generators.size() == 1);
  // df = dx1.
  DifferentialForm dx1(3, 1);
  dx1.add_component(0b001u, Polynomial::constant(3, Rational(1)));
  CHECK(rep.at(1).generators[0] == dx1);
}

TEST_CASE("quadric in four variables carries a correction block") {
  auto s = setup("quadratic", 4);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  CHECK(rep.q == 4);
  CHECK(finite_dims(rep) == std::vector<long>({1, 1, 0, 1, 2}));

  const auto& h3 = rep.at(3);
  REQUIRE(h3.generators.size() == 1);
  CHECK(h3.generators[0] == sigma_form(s.W).scaled(s.f));
  CHECK(h3.placement == std::map<long, long>({{6, 1}}));

  const auto& h4 = rep.at(4);
  REQUIRE(h4.generators.size() == 2);
  CHECK(h4.generators[0] == volume_form(4));
  CHECK(h4.generators[1] == volume_form(4).scaled(s.f * s.f));
  CHECK(h4.placement == std::map<long, long>({{4, 1}, {8, 1}}));
}

TEST_CASE("quadric in three variables stays lean") {
  auto s = setup("quadratic", 3);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  CHECK(finite_dims(rep) == std::vector<long>({1, 1, 0, 1}));
  CHECK(rep.at(2).dim == 0);
}

TEST_CASE("sentinels mark the uncovered combinations") {
  auto s3 = setup("A2", 3);
  CHECK(closed_form_report(s3.f, s3.W, s3.Q, 1).at(1).kind ==
        DimKind::sentinel);
  // q = 1 leaves the (n-1)-entry uncovered.
  CHECK(closed_form_report(s3.f, s3.W, s3.Q, 2).at(2).kind ==
        DimKind::sentinel);

  auto s4 = setup("A2", 4);
  // middle degree k = 2 is uncovered exactly for p in {1, 2}.
  CHECK(closed_form_report(s4.f, s4.W, s4.Q, 1).at(2).kind ==
        DimKind::sentinel);
  CHECK(closed_form_report(s4.f, s4.W, s4.Q, 2).at(2).kind ==
        DimKind::sentinel);
  CHECK(closed_form_report(s4.f, s4.W, s4.Q, 0).at(2).kind ==
        DimKind::finite);
  CHECK(closed_form_report(s4.f, s4.W, s4.Q, 3).at(2).kind ==
        DimKind::finite);
}

TEST_CASE("infinite entries carry their finite summand") {
  auto s3 = setup("A2", 3);
  // q = 1: the top entry is the quotient by f, infinite over K.
  auto rep1 = closed_form_report(s3.f, s3.W, s3.Q, 2);
  CHECK(rep1.at(3).kind == DimKind::infinite);
  CHECK(!rep1.at(3).note.empty());

  // q = 2 at k = n-1: infinite with an explicit h*sigma summand.
  auto rep2 = closed_form_report(s3.f, s3.W, s3.Q, 1);
  CHECK(rep2.at(2).kind == DimKind::infinite);
  CHECK(rep2.at(2).generators.empty());  // N - sum(w) < 0 here

  WeightSystem unit{{1, 1, 1}};
  auto cubic = poly("x1^3+x2^3+x3^3", 3);
  auto qc = milnor_algebra(cubic, unit);
  auto repc = closed_form_report(cubic, unit, qc, 1);
  REQUIRE(repc.at(2).kind == DimKind::infinite);
  REQUIRE(repc.at(2).generators.size() == 1);
  CHECK(repc.at(2).generators[0] == sigma_form(unit));
}

TEST_CASE("the deep D-germ class is f times the quotient generator") {
  auto s = setup("D5", 4);
  auto rep = closed_form_report(s.f, s.W, s.Q, 0);
  const auto& h3 = rep.at(3);
  CHECK(h3.kind == DimKind::finite);
  CHECK(h3.dim == 1);
  REQUIRE(h3.generators.size() == 1);
  DifferentialForm expect =
      sigma_form(s.W).scaled(s.f * Polynomial::variable(4, 0));
  CHECK(h3.generators[0] == expect);
  CHECK(h3.placement == std::map<long, long>({{24, 1}}));
  CHECK(twisted_d(s.f, 0, h3.generators[0]).is_zero());

  const auto& h4 = rep.at(4);
  CHECK(h4.dim == 6);
  CHECK(placement_total(h4) == 6);
  CHECK(h4.placement ==
        std::map<long, long>({{13, 1}, {15, 1}, {16, 1}, {17, 1}, {19, 1}, {32, 1}}));
}

TEST_CASE("every materialized generator is a cocycle") {
  for (int n = 3; n <= 4; ++n) {
    for (const auto& nf : catalog_sweep(n, n,
                                        {Family::A, Family::D,
                                         Family::Regular, Family::Quadratic},
                                        4)) {
      auto Q = milnor_algebra(nf.f, nf.weights);
      for (long p : {-1L, 0L, 1L, static_cast<long>(n - 2)}) {
        auto rep = closed_form_report(nf.f, nf.weights, Q, p);
        for (const auto& e : rep.entries) {
          for (const auto& g : e.generators) {
            CHECK(twisted_d(nf.f, p, g).is_zero());
            CHECK(!g.is_zero());
          }
          if (e.kind == DimKind::finite) {
            CHECK(placement_total(e) == e.dim);
            CHECK(static_cast<long>(e.generators.size()) == e.dim);
          }
        }
      }
    }
  }
}
