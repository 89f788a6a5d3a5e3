#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedeform/laurent.hpp"
#include "liedeform/linalg.hpp"

using namespace liedeform;

namespace {

std::mt19937 rng(20240811);

Rational random_rational(int span = 20) {
  std::uniform_int_distribution<int> num(-span, span);
  std::uniform_int_distribution<int> den(1, span);
  return rat(num(rng), den(rng));
}

QMatrix random_matrix(int r, int c, int span = 9) {
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = random_rational(span);
  return m;
}

// independent oracle: fraction-free (Bareiss) elimination rank
int bareiss_rank(QMatrix m) {
  int rank = 0;
  Rational prev(1);
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    for (int i = rank + 1; i < m.rows(); ++i)
      for (int j = col + 1; j < m.cols(); ++j)
        m(i, j) = (m(rank, col) * m(i, j) - m(i, col) * m(rank, j)) / prev;
    for (int i = rank + 1; i < m.rows(); ++i) m(i, col) = 0;
    prev = m(rank, col);
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("rational invariants and field identities") {
  CHECK(to_string(rat(6, -8)) == "-3/4");
  CHECK(to_string(rat(0, 5)) == "0");
  CHECK(to_string(rat(7)) == "7");
  CHECK(rational_from_string("12/18") == rat(2, 3));
  for (int it = 0; it < 300; ++it) {
    Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    if (a != 0) CHECK(a * (1 / a) == 1);
    Rational q = a - b;
    CHECK(q.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), mpz_class(q.get_num()).get_mpz_t(), mpz_class(q.get_den()).get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("laurent arithmetic") {
  LaurentPoly f(rat(1), -1);
  f += LaurentPoly(rat(1), 0);  // t^-1 + 1
  LaurentPoly g(rat(2), 3);     // 2 t^3
  CHECK((f * g).valuation() == 2);
  CHECK((f * g).coeff(2) == 2);
  CHECK((f * g).coeff(3) == 2);
  CHECK(f.eval(rat(2)) == rat(3, 2));
  CHECK(LaurentPoly().is_zero());
  CHECK((f - f).is_zero());

  std::uniform_int_distribution<int> exps(-5, 5);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly a, b;
    for (int k = 0; k < 4; ++k) {
      a += LaurentPoly(random_rational(5), exps(rng));
      b += LaurentPoly(random_rational(5), exps(rng));
    }
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("laurent_normalize") {
  {
    auto [shift, v] = laurent_normalize({LaurentPoly(rat(1), 2), LaurentPoly(rat(1), 3)});
    CHECK(shift == 2);
    CHECK(v[0] == LaurentPoly(rat(1), 0));
    CHECK(v[1] == LaurentPoly(rat(1), 1));
  }
  {
    LaurentPoly f(rat(1), -1);
    f += LaurentPoly(rat(1), 0);
    auto [shift, v] = laurent_normalize({f, LaurentPoly(rat(1), 0)});
    CHECK(shift == -1);
    CHECK(v[0].valuation() == 0);
    CHECK(v[1] == LaurentPoly(rat(1), 1));
  }
  CHECK_THROWS_WITH(laurent_normalize({LaurentPoly(), LaurentPoly()}), "zero generator");
}

TEST_CASE("rref identity and rank-1") {
  auto rr = rref(QMatrix::identity(3));
  CHECK(rr.rank == 3);
  CHECK(rr.reduced == QMatrix::identity(3));

  QMatrix m(2, 2);
  m(0, 0) = m(0, 1) = m(1, 0) = m(1, 1) = 1;
  auto r2 = rref(m);
  CHECK(r2.rank == 1);
  CHECK(r2.reduced(0, 0) == 1);
  CHECK(r2.reduced(0, 1) == 1);
  CHECK(r2.reduced(1, 0) == 0);
  CHECK(r2.reduced(1, 1) == 0);
}

TEST_CASE("rref rank agrees with fraction-free elimination") {
  for (int it = 0; it < 50; ++it) {
    QMatrix m = random_matrix(5, 8);
    CHECK(rref(m).rank == bareiss_rank(m));
  }
}

TEST_CASE("rref idempotence") {
  for (int it = 0; it < 30; ++it) {
    QMatrix m = random_matrix(4, 6, 5);
    auto rr = rref(m);
    auto rr2 = rref(rr.reduced);
    CHECK(rr2.reduced == rr.reduced);
  }
}

TEST_CASE("kernel basics") {
  QMatrix z(2, 2);
  CHECK(kernel(z).size() == 2);

  QMatrix row(1, 2);
  row(0, 0) = 1;
  row(0, 1) = 1;
  auto ker = kernel(row);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0][0] == -ker[0][1]);
}

TEST_CASE("kernel of the raising map on the sl(4) strictly upper block") {
  // brute force: the 6 positions (i,j), i<j, of 4x4 strictly upper matrices;
  // the commutator with the full shift matrix is assembled by hand
  std::vector<std::pair<int, int>> pos{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}};
  auto mat_of = [&](const QVec& coords) {
    QMatrix m(4, 4);
    for (int k = 0; k < 6; ++k) m(pos[k].first, pos[k].second) = coords[k];
    return m;
  };
  QMatrix lam(4, 4);
  lam(0, 1) = lam(1, 2) = lam(2, 3) = 1;
  QMatrix sys(6, 6);
  for (int k = 0; k < 6; ++k) {
    QVec e(6, Rational(0));
    e[k] = 1;
    QMatrix c = commutator(lam, mat_of(e));
    for (int q = 0; q < 6; ++q) sys(q, k) = c(pos[q].first, pos[q].second);
  }
  CHECK(kernel(sys).size() == 3);
}

TEST_CASE("kernel/rank consistency on random shapes") {
  std::uniform_int_distribution<int> dim(1, 10);
  for (int it = 0; it < 200; ++it) {
    int r = dim(rng), c = dim(rng);
    QMatrix m = random_matrix(r, c, 4);
    auto rr = rref(m);
    auto ker = kernel(m);
    CHECK(static_cast<int>(ker.size()) + rr.rank == c);
    for (const QVec& v : ker)
      for (int i = 0; i < r; ++i) {
        Rational s(0);
        for (int j = 0; j < c; ++j) s += m(i, j) * v[j];
        CHECK(s == 0);
      }
  }
}

TEST_CASE("laurent determinant") {
  std::vector<std::vector<LaurentPoly>> m(2, std::vector<LaurentPoly>(2));
  m[0][0] = LaurentPoly(rat(1), 1);
  m[0][1] = LaurentPoly(rat(1), 0);
  m[1][0] = LaurentPoly(rat(1), 0);
  m[1][1] = LaurentPoly(rat(1), -1);
  CHECK(laurent_det(m).is_zero());
  m[1][0] = LaurentPoly(rat(2), 2);
  LaurentPoly d = laurent_det(m);
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(2) == -2);
}
