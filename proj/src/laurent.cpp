#include "liedeform/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace liedeform {

LaurentPoly::LaurentPoly(const Rational& c, int exp) {
  if (c != 0) {
    val_ = exp;
    coeff_.push_back(c);
  }
}

void LaurentPoly::trim() {
  size_t lo = 0;
  while (lo < coeff_.size() && coeff_[lo] == 0) ++lo;
  size_t hi = coeff_.size();
  while (hi > lo && coeff_[hi - 1] == 0) --hi;
  if (lo == hi) {
    coeff_.clear();
    val_ = 0;
    return;
  }
  if (lo > 0) coeff_.erase(coeff_.begin(), coeff_.begin() + lo);
  coeff_.resize(hi - lo);
  val_ += static_cast<int>(lo);
}

int LaurentPoly::valuation() const {
  check(!is_zero(), "valuation of zero Laurent polynomial");
  return val_;
}

int LaurentPoly::degree() const {
  check(!is_zero(), "degree of zero Laurent polynomial");
  return val_ + static_cast<int>(coeff_.size()) - 1;
}

Rational LaurentPoly::coeff(int exp) const {
  if (is_zero() || exp < val_ || exp >= val_ + static_cast<int>(coeff_.size())) return Rational(0);
  return coeff_[exp - val_];
}

Rational LaurentPoly::eval(const Rational& t0) const {
  check(t0 != 0, "Laurent evaluation at t = 0");
  Rational acc(0), p(1);
  // positive part from val_ upward
  Rational tinv = 1 / t0;
  Rational pw(1);
  if (val_ >= 0) {
    for (int k = 0; k < val_; ++k) pw *= t0;
  } else {
    for (int k = 0; k < -val_; ++k) pw *= tinv;
  }
  for (const Rational& c : coeff_) {
    acc += c * pw;
    pw *= t0;
  }
  return acc;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.val_ += k;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (Rational& c : r.coeff_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(val_, o.val_);
  int hi = std::max(val_ + static_cast<int>(coeff_.size()), o.val_ + static_cast<int>(o.coeff_.size()));
  std::vector<Rational> out(hi - lo, Rational(0));
  for (size_t i = 0; i < coeff_.size(); ++i) out[val_ - lo + i] += coeff_[i];
  for (size_t i = 0; i < o.coeff_.size(); ++i) out[o.val_ - lo + i] += o.coeff_[i];
  val_ = lo;
  coeff_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  LaurentPoly r;
  r.val_ = a.val_ + b.val_;
  r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeff_.size(); ++i)
    for (size_t j = 0; j < b.coeff_.size(); ++j) r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeff_.clear();
    val_ = 0;
    return *this;
  }
  for (Rational& x : coeff_) x *= c;
  return *this;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  check(!den.is_zero(), "Laurent division by zero");
  if (num.is_zero()) return LaurentPoly();
  // shift both to ordinary polynomials and long-divide from the top
  LaurentPoly n = num.shifted(-num.val_);
  LaurentPoly d = den.shifted(-den.val_);
  int qval = num.val_ - den.val_;
  std::vector<Rational> nc = n.coeff_, dc = d.coeff_;
  check(nc.size() >= dc.size(), "non-exact Laurent division");
  std::vector<Rational> q(nc.size() - dc.size() + 1, Rational(0));
  for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
    Rational c = nc[k + dc.size() - 1] / dc.back();
    q[k] = c;
    if (c != 0)
      for (size_t j = 0; j < dc.size(); ++j) nc[k + j] -= c * dc[j];
  }
  for (const Rational& c : nc) check(c == 0, "non-exact Laurent division");
  LaurentPoly r;
  r.val_ = qval;
  r.coeff_ = std::move(q);
  r.trim();
  return r;
}

std::vector<std::pair<int, Rational>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (size_t i = 0; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) out.emplace_back(val_ + static_cast<int>(i), coeff_[i]);
  return out;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (e != 0) os << "*t^" << e;
  }
  return os.str();
}

std::pair<int, std::vector<LaurentPoly>> laurent_normalize(const std::vector<LaurentPoly>& v) {
  bool any = false;
  int shift = 0;
  for (const auto& p : v)
    if (!p.is_zero()) {
      shift = any ? std::min(shift, p.valuation()) : p.valuation();
      any = true;
    }
  check(any, "zero generator");
  std::vector<LaurentPoly> out;
  out.reserve(v.size());
  for (const auto& p : v) out.push_back(p.shifted(-shift));
  return {shift, out};
}

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
  size_t n = m.size();
  for (auto& row : m) check(row.size() == n, "laurent_det needs a square matrix");
  if (n == 0) return LaurentPoly(rat(1));
  // Bareiss fraction-free elimination; divisions are exact in the ring.
  LaurentPoly prev(rat(1));
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  LaurentPoly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

}  // namespace liedeform
