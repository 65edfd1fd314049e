#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace npcoh {

// Exact arithmetic everywhere. mpq_class keeps fractions reduced with a
// positive denominator, which is exactly the canonical form we rely on when
// comparing and printing.
using Rational = mpq_class;
using Integer = mpz_class;

// User-facing input problems (bad syntax, bad weights, inconsistent flags).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : InputError {
  size_t position;
  ParseError(size_t pos, const std::string& what)
      : InputError(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

inline Rational rational_pow(const Rational& base, unsigned long e) {
  Rational r(1);
  Rational b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace npcoh
