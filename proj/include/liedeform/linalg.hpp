#ifndef LIEDEFORM_LINALG_HPP
#define LIEDEFORM_LINALG_HPP

#include <utility>
#include <vector>

#include "liedeform/rational.hpp"

namespace liedeform {

using QVec = std::vector<Rational>;

// Dense rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Rational(0)) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;
  QMatrix transpose() const;
  bool operator==(const QMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool is_zero() const;

  friend QMatrix commutator(const QMatrix& a, const QMatrix& b);  // ab - ba

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct RrefResult {
  int rank = 0;
  QMatrix reduced;
  std::vector<int> pivots;  // pivot column per nonzero row
};

// Unique reduced row-echelon form; first-nonzero-entry pivoting.
RrefResult rref(const QMatrix& m);

// Basis of the right null space, one vector per free column in column order.
std::vector<QVec> kernel(const QMatrix& m);

// Row-space basis in reduced echelon form, zero rows dropped.
std::vector<QVec> row_space(const std::vector<QVec>& rows, int cols);

bool rows_equal_span(const std::vector<QVec>& a, const std::vector<QVec>& b, int cols);
bool in_row_span(const std::vector<QVec>& rows, const QVec& v, int cols);

}  // namespace liedeform

#endif
