#include "npcoh/linalg.hpp"

#include <cassert>

namespace npcoh {

SparseRow row_combine(const Integer& a, const SparseRow& r, const Integer& b,
                      const SparseRow& s) {
  SparseRow out;
  out.ent.reserve(r.ent.size() + s.ent.size());
  size_t i = 0, j = 0;
  Integer v;
  while (i < r.ent.size() && j < s.ent.size()) {
    int cr = r.ent[i].first, cs = s.ent[j].first;
    if (cr < cs) {
      out.push(cr, a * r.ent[i].second);
      ++i;
    } else if (cs < cr) {
      out.push(cs, b * s.ent[j].second);
      ++j;
    } else {
      v = a * r.ent[i].second + b * s.ent[j].second;
      if (v != 0) out.push(cr, v);
      ++i;
      ++j;
    }
  }
  for (; i < r.ent.size(); ++i) out.push(r.ent[i].first, a * r.ent[i].second);
  for (; j < s.ent.size(); ++j) out.push(s.ent[j].first, b * s.ent[j].second);
  return out;
}

void row_normalize(SparseRow& r) {
  if (r.ent.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : r.ent) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  bool flip = r.ent.front().second < 0;
  if (g == 1 && !flip) return;
  if (flip) g = -g;
  for (auto& [c, v] : r.ent) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    v = q;
  }
}

SparseRow row_from_rationals(const std::vector<std::pair<int, Rational>>& v,
                             Rational* scale) {
  Integer lcm = 1;
  for (const auto& [c, q] : v) {
    if (q == 0) continue;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  SparseRow r;
  r.ent.reserve(v.size());
  for (const auto& [c, q] : v) {
    if (q == 0) continue;
    Integer val = q.get_num() * (lcm / q.get_den());
    r.push(c, std::move(val));
  }
  row_normalize(r);
  if (scale) {
    *scale = 1;
    for (const auto& [c, q] : v) {
      if (q == 0) continue;
      for (const auto& [rc, rv] : r.ent) {
        if (rc == c) {
          *scale = Rational(rv) / q;
          break;
        }
      }
      break;
    }
  }
  return r;
}

int Eliminator::add_row(SparseRow r) {
  if (track_) {
    // Multiplier column for this row; kMultBase keeps the identity block to
    // the right of every real column.
    r.push(kMultBase + added_, Integer(1));
  }
  int self = added_++;
  (void)self;
  row_normalize(r);
  for (;;) {
    if (r.empty() || r.lead_col() >= kMultBase) break;
    auto it = pivot_row_.find(r.lead_col());
    if (it == pivot_row_.end()) break;
    const SparseRow& prow = rows_[it->second];
    // Cancel the leading entry: r <- pivot*r - lead*prow, kept primitive.
    r = row_combine(prow.lead_val(), r, -r.lead_val(), prow);
    row_normalize(r);
  }
  if (r.empty() || r.lead_col() >= kMultBase) {
    last_dep_.clear();
    if (track_) {
      last_dep_.reserve(r.ent.size());
      for (auto& [c, v] : r.ent) last_dep_.emplace_back(c - kMultBase, v);
    }
    return -1;
  }
  int pc = r.lead_col();
  pivot_row_.emplace(pc, static_cast<int>(rows_.size()));
  rows_.push_back(std::move(r));
  return pc;
}

}  // namespace npcoh
