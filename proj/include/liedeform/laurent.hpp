#ifndef LIEDEFORM_LAURENT_HPP
#define LIEDEFORM_LAURENT_HPP

#include <utility>
#include <vector>

#include "liedeform/rational.hpp"

namespace liedeform {

// Laurent polynomial in one variable t over the rationals.  Stored as the
// lowest exponent (valuation) plus a coefficient run whose first and last
// entries are nonzero; the zero polynomial is the empty run.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c, int exp = 0);
  static LaurentPoly t_power(int k) { return LaurentPoly(rat(1), k); }

  bool is_zero() const { return coeff_.empty(); }
  int valuation() const;  // lowest exponent; throws on zero
  int degree() const;     // highest exponent; throws on zero
  Rational coeff(int exp) const;
  Rational at_zero() const { return coeff(0); }
  Rational eval(const Rational& t0) const;  // t0 != 0

  LaurentPoly shifted(int k) const;  // multiply by t^k

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator*(const Rational& c, LaurentPoly p) { return p *= c; }
  bool operator==(const LaurentPoly& o) const { return val_ == o.val_ && coeff_ == o.coeff_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Exact division; throws if the quotient is not a Laurent polynomial.
  friend LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

  // Increasing (exponent, coefficient) pairs, zero coefficients skipped.
  std::vector<std::pair<int, Rational>> terms() const;
  std::string str() const;

 private:
  void trim();
  int val_ = 0;
  std::vector<Rational> coeff_;
};

// min valuation over entries and the shifted vector t^(-shift) * v; errors
// on an all-zero input.
std::pair<int, std::vector<LaurentPoly>> laurent_normalize(const std::vector<LaurentPoly>& v);

// Determinant of a square Laurent matrix via fraction-free elimination.
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

}  // namespace liedeform

#endif
