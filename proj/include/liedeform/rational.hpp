#ifndef LIEDEFORM_RATIONAL_HPP
#define LIEDEFORM_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace liedeform {

// Exact rationals. mpq_class keeps values canonical (lowest terms,
// positive denominator, zero as 0/1) as long as raw constructions are
// canonicalized, which rat() and rational_from_string() do.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(static_cast<signed long>(num), std::abs(den));
  if (den < 0) r = -r;
  r.canonicalize();
  return r;
}

// Serializes as "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

}  // namespace liedeform

#endif
