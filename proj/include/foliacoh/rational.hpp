#ifndef FOLIACOH_RATIONAL_HPP
#define FOLIACOH_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace foliacoh {

// GMP rationals are kept canonical (lowest terms, positive denominator) after
// every arithmetic operation; anything built from raw parts must call
// canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const RationalVector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace foliacoh

#endif  // FOLIACOH_RATIONAL_HPP
