#include "doctest.h"

#include <map>

#include "npcoh/linalg.hpp"

using namespace npcoh;

namespace {

SparseRow row(std::initializer_list<std::pair<int, long>> ents) {
  SparseRow r;
  for (const auto& [c, v] : ents)
    if (v != 0) r.push(c, Integer(v));
  return r;
}

}  // namespace

TEST_CASE("row normalization divides by content and fixes the sign") {
  SparseRow r = row({{0, -6}, {2, 9}, {5, -3}});
  row_normalize(r);
  CHECK(r.ent.size() == 3);
  CHECK(r.lead_col() == 0);
  CHECK(r.lead_val() == Integer(2));
  CHECK(r.ent[1].second == Integer(-3));
  CHECK(r.ent[2].second == Integer(1));
}

TEST_CASE("rational rows clear denominators to a primitive vector") {
  SparseRow r = row_from_rationals({{0, Rational(1, 2)}, {3, Rational(-1, 3)}});
  CHECK(r.ent.size() == 2);
  CHECK(r.ent[0] == std::pair<int, Integer>(0, Integer(3)));
  CHECK(r.ent[1] == std::pair<int, Integer>(3, Integer(-2)));
  CHECK(row_from_rationals({{1, Rational(0)}}).empty());
}

TEST_CASE("rational row conversion reports the exact scale factor") {
  Rational s;
  row_from_rationals({{0, Rational(1, 2)}, {3, Rational(-1, 3)}}, &s);
  CHECK(s == Rational(6));
  // A negative leading entry flips the whole row, so the scale goes negative.
  row_from_rationals({{0, Rational(-3)}, {1, Rational(2)}}, &s);
  CHECK(s == Rational(-1));
  row_from_rationals({{2, Rational(2, 3)}, {5, Rational(4, 3)}}, &s);
  CHECK(s == Rational(3, 2));
  row_from_rationals({{1, Rational(0)}}, &s);
  CHECK(s == Rational(1));
}

TEST_CASE("row combination merges by column exactly") {
  SparseRow a = row({{0, 1}, {1, 2}});
  SparseRow b = row({{1, -1}, {2, 5}});
  SparseRow c = row_combine(Integer(2), a, Integer(4), b);
  // col 1 cancels: 2*2 + 4*(-1) = 0, and zero results are dropped.
  CHECK(c.ent.size() == 2);
  CHECK(c.ent[0] == std::pair<int, Integer>(0, Integer(2)));
  CHECK(c.ent[1] == std::pair<int, Integer>(2, Integer(20)));
  SparseRow z = row_combine(Integer(1), a, Integer(-1), a);
  CHECK(z.empty());
}

TEST_CASE("eliminator computes ranks incrementally") {
  Eliminator e;
  CHECK(e.add_row(row({{0, 1}, {1, 1}})) == 0);
  CHECK(e.add_row(row({{1, 1}, {2, 1}})) == 1);
  CHECK(e.add_row(row({{0, 1}, {2, -1}})) == -1);  // sum of the previous two
  CHECK(e.rank() == 2);
  CHECK(e.add_row(row({{2, 7}})) == 2);
  CHECK(e.rank() == 3);
  CHECK(e.rows_added() == 4);
}

TEST_CASE("eliminator handles duplicate and empty rows") {
  Eliminator e;
  CHECK(e.add_row(SparseRow{}) == -1);
  CHECK(e.add_row(row({{3, 2}})) == 3);
  CHECK(e.add_row(row({{3, -5}})) == -1);
  CHECK(e.rank() == 1);
}

TEST_CASE("dependency tracking yields exact kernel combinations") {
  Eliminator e(true);
  SparseRow r0 = row({{0, 2}, {1, 1}});
  SparseRow r1 = row({{1, 3}, {2, -1}});
  SparseRow r2 = row({{0, 2}, {1, 4}, {2, -1}});  // r0 + r1
  CHECK(e.add_row(r0) >= 0);
  CHECK(e.add_row(r1) >= 0);
  CHECK(e.add_row(r2) == -1);
  const auto& dep = e.last_dependency();
  // dep is a primitive integer vector with sum_i dep_i * row_i = 0.
  REQUIRE(dep.size() == 3);
  std::map<int, Integer> d(dep.begin(), dep.end());
  std::map<int, Integer> acc;
  const SparseRow* rows[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i)
    for (const auto& [c, v] : rows[i]->ent) acc[c] += d[i] * v;
  for (const auto& [c, v] : acc) CHECK(v == 0);
  CHECK(d[2] != 0);
}

TEST_CASE("dependencies stay exact under fraction-free growth") {
  // Rows engineered to force multi-step eliminations with content growth.
  Eliminator e(true);
  std::vector<SparseRow> rows = {
      row({{0, 3}, {1, 5}, {2, 7}}),
      row({{0, 2}, {1, -4}, {3, 9}}),
      row({{1, 11}, {2, 13}, {3, -6}}),
  };
  for (auto& r : rows) CHECK(e.add_row(r) >= 0);
  // A rational combination of the three rows, cleared to integers:
  // 6*r0 - 9*r1 + 12*r2.
  std::map<int, Integer> acc;
  Integer co[3] = {Integer(6), Integer(-9), Integer(12)};
  for (int i = 0; i < 3; ++i)
    for (const auto& [c, v] : rows[i].ent) acc[c] += co[i] * v;
  SparseRow mix;
  for (const auto& [c, v] : acc)
    if (v != 0) mix.push(c, v);
  CHECK(e.add_row(mix) == -1);
  const auto& dep = e.last_dependency();
  std::map<int, Integer> d(dep.begin(), dep.end());
  REQUIRE(d.count(3) == 1);
  // Dependency must be proportional to (6, -9, 12, -1).
  Integer scale = d[3];
  CHECK(d[0] * Integer(-1) == co[0] * scale);
  CHECK(d[1] * Integer(-1) == co[1] * scale);
  CHECK(d[2] * Integer(-1) == co[2] * scale);
}

TEST_CASE("pivoting is deterministic in insertion order") {
  Eliminator a, b;
  CHECK(a.add_row(row({{0, 1}, {1, 1}})) == 0);
  CHECK(a.add_row(row({{0, 1}, {1, 2}})) == 1);
  CHECK(b.add_row(row({{0, 1}, {1, 2}})) == 0);
  CHECK(b.add_row(row({{0, 1}, {1, 1}})) == 1);
  CHECK(a.rank() == b.rank());
}
