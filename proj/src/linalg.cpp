#include "liedeform/linalg.hpp"

namespace liedeform {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  QMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  check(cols_ == o.rows_, "matrix shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix r = *this;
  for (auto& x : r.e_) x *= c;
  return r;
}

QMatrix QMatrix::transpose() const {
  QMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool QMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int p = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::vector<QVec> kernel(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : rr.pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (int r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> row_space(const std::vector<QVec>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    check(static_cast<int>(rows[i].size()) == cols, "row length mismatch");
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][j];
  }
  RrefResult rr = rref(m);
  std::vector<QVec> out;
  for (int i = 0; i < rr.rank; ++i) {
    QVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = rr.reduced(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

bool rows_equal_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int cols) {
  return row_space(a, cols) == row_space(b, cols);
}

bool in_row_span(const std::vector<QVec>& rows, const QVec& v, int cols) {
  auto base = row_space(rows, cols);
  auto ext = base;
  ext.push_back(v);
  return row_space(ext, cols).size() == base.size();
}

}  // namespace liedeform
