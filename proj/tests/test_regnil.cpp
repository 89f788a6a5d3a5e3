#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedeform/chains.hpp"
#include "liedeform/regnil.hpp"

using namespace liedeform;

TEST_CASE("centralizer dimension and heights") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::A, 4},
                                                        {LieType::B, 3},
                                                        {LieType::C, 3},
                                                        {LieType::D, 4},
                                                        {LieType::D, 5},
                                                        {LieType::G2, 2},
                                                        {LieType::F4, 4}}) {
    const LieModel& m = model_for(cfg.first, cfg.second);
    JordanData jd = jordan_subalgebra(m);
    CHECK(jd.span.dimension() == m.sys.rank);
    CHECK(jd.heights == exponents_of(cfg.first, m.sys.rank));
  }
}

TEST_CASE("sl(n+1): the centralizer is spanned by the matrix powers") {
  for (int n : {2, 3, 5}) {
    const LieModel& m = model_for(LieType::A, n);
    const MatrixRealization* mr = realization_for(LieType::A, n);
    JordanData jd = jordan_subalgebra(m);
    auto powers = matrix_jordan_basis(m, *mr);
    CHECK(Subspace::from_elements(powers, m) == jd.span);
  }
}

TEST_CASE("classical centralizers match the matrix power oracle") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{
           {LieType::B, 3}, {LieType::B, 4}, {LieType::C, 3}, {LieType::C, 4}, {LieType::D, 4},
           {LieType::D, 5}}) {
    const LieModel& m = model_for(cfg.first, cfg.second);
    const MatrixRealization* mr = realization_for(cfg.first, cfg.second);
    JordanData jd = jordan_subalgebra(m);
    CHECK(Subspace::from_elements(matrix_jordan_basis(m, *mr), m) == jd.span);
  }
}

TEST_CASE("stated exceptional generating sets lie in the centralizer and span it") {
  for (auto t : {LieType::G2, LieType::F4, LieType::E6}) {
    const LieModel& m = model_for(t, 0);
    JordanData jd = jordan_subalgebra(m);
    auto stated = stated_jordan_basis(m);
    for (const Element& f : stated) {
      CHECK(m.bracket(jd.lambda, f).is_zero());
      CHECK(jd.span.contains(f, m));
    }
    CHECK(Subspace::from_elements(stated, m) == jd.span);
  }
}

TEST_CASE("F4 centralizer heights") {
  const LieModel& m = model_for(LieType::F4, 4);
  JordanData jd = jordan_subalgebra(m);
  CHECK(jd.heights == std::multiset<int>{1, 5, 7, 11});
}

TEST_CASE("appendix deformation directions decompose and act as stated") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::B, 3},
                                                        {LieType::B, 4},
                                                        {LieType::C, 3},
                                                        {LieType::C, 4},
                                                        {LieType::D, 4},
                                                        {LieType::D, 5}}) {
    const LieModel& m = model_for(cfg.first, cfg.second);
    const MatrixRealization* mr = realization_for(cfg.first, cfg.second);
    Element s = build_S(m, *mr);
    CHECK(!s.is_zero());
    // S is supported on the nilradical only
    for (auto& [k, v] : s.c) {
      (void)v;
      CHECK(m.is_xindex(k));
    }
  }
  // type A: the direction is zero and K = J
  const LieModel& a = model_for(LieType::A, 4);
  const MatrixRealization* ar = realization_for(LieType::A, 4);
  CHECK(build_S(a, *ar).is_zero());
  // sp(2n), n odd: the direction is the half identity block upper right
  for (int n : {3, 5}) {
    const LieModel& m = model_for(LieType::C, n);
    const MatrixRealization* mr = realization_for(LieType::C, n);
    QMatrix s = mr->to_matrix(m, build_S(m, *mr));
    QMatrix expect(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) expect(i, n + i) = rat(-1, 2);
    CHECK(s == expect);
  }
}

TEST_CASE("K matches the appendix-predicted generator shapes") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::B, 2},
                                                        {LieType::B, 3},
                                                        {LieType::B, 4},
                                                        {LieType::C, 2},
                                                        {LieType::C, 3},
                                                        {LieType::C, 4},
                                                        {LieType::C, 5},
                                                        {LieType::D, 4},
                                                        {LieType::D, 5},
                                                        {LieType::D, 6}}) {
    const LieModel& m = model_for(cfg.first, cfg.second);
    const MatrixRealization* mr = realization_for(cfg.first, cfg.second);
    JordanData jd = jordan_subalgebra(m);
    KBasis k = build_K(m, mr, jd);
    check_kbasis(m, k);
    auto predicted = predicted_K_classical(m, *mr);
    CHECK(Subspace::from_elements(predicted, m) == k.span);
  }
}

TEST_CASE("type A K is the centralizer itself") {
  const LieModel& m = model_for(LieType::A, 5);
  const MatrixRealization* mr = realization_for(LieType::A, 5);
  JordanData jd = jordan_subalgebra(m);
  KBasis k = build_K(m, mr, jd);
  check_kbasis(m, k);
  CHECK(k.span == jd.span);
}

TEST_CASE("G2 K") {
  const LieModel& m = model_for(LieType::G2, 2);
  JordanData jd = jordan_subalgebra(m);
  KBasis k = build_K(m, nullptr, jd);
  check_kbasis(m, k);
  Subspace expect =
      Subspace::from_elements({m.x(m.sys.parse_label("31")), m.x(m.sys.parse_label("32"))}, m);
  CHECK(k.span == expect);
}

TEST_CASE("F4 K is the unique ideal") {
  const LieModel& m = model_for(LieType::F4, 4);
  JordanData jd = jordan_subalgebra(m);
  KBasis k = build_K(m, nullptr, jd);
  check_kbasis(m, k);
  std::vector<Element> gens;
  for (auto lab : {"1232", "1242", "1342", "2342"}) gens.push_back(m.x(m.sys.parse_label(lab)));
  CHECK(k.span == Subspace::from_elements(gens, m));
}

TEST_CASE("E6 K invariants") {
  const LieModel& m = model_for(LieType::E6, 6);
  JordanData jd = jordan_subalgebra(m);
  KBasis k = build_K(m, nullptr, jd);
  check_kbasis(m, k);
  CHECK(k.min_height == 6);
  CHECK(k.max_height == 11);
  // stated members that survive the construction unchanged
  auto f = stated_jordan_basis(m);
  CHECK(k.span.contains(f[3], m));
  CHECK(k.span.contains(f[4], m));
  CHECK(k.span.contains(f[5], m));
}

TEST_CASE("block commutator identity for split upper triangular pairs") {
  // [[A,B;0,-A'], [C,D;0,-C']] = [0, AD - BC' - CB + DA'; 0, 0] when [A,C] = 0
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> c(-3, 3);
  int n = 4;
  auto antitranspose = [&](const QMatrix& a) {
    QMatrix r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = a(n - 1 - j, n - 1 - i);
    return r;
  };
  for (int it = 0; it < 25; ++it) {
    QMatrix a(n, n), b(n, n), d(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a(i, j) = rat(c(rng));
        b(i, j) = rat(c(rng));
        d(i, j) = rat(c(rng));
      }
    // C commutes with A: take a polynomial in A
    QMatrix cm = a * a * rat(2) + a * rat(-3) + QMatrix::identity(n) * rat(5);
    QMatrix ap = antitranspose(a), cp = antitranspose(cm);
    auto embed = [&](const QMatrix& x11, const QMatrix& x12, const QMatrix& x22) {
      QMatrix r(2 * n, 2 * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          r(i, j) = x11(i, j);
          r(i, n + j) = x12(i, j);
          r(n + i, n + j) = x22(i, j);
        }
      return r;
    };
    QMatrix lhs = commutator(embed(a, b, ap * rat(-1)), embed(cm, d, cp * rat(-1)));
    QMatrix block = a * d - b * cp - cm * b + d * ap;
    QMatrix rhs = embed(QMatrix(n, n), block, QMatrix(n, n));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("K abelian-ness is re-verified independently") {
  const LieModel& m = model_for(LieType::B, 4);
  const MatrixRealization* mr = realization_for(LieType::B, 4);
  JordanData jd = jordan_subalgebra(m);
  KBasis k = build_K(m, mr, jd);
  auto gens = k.generators();
  for (const Element& u : gens)
    for (const Element& v : gens) CHECK(m.bracket(u, v).is_zero());
}

TEST_CASE("raising by the regular nilpotent moves up one height") {
  const LieModel& m = model_for(LieType::C, 3);
  Element lam = m.regular_nilpotent();
  for (int r = 0; r < m.sys.count(); ++r) {
    Element img = m.bracket(lam, m.x(r));
    for (auto& [k, v] : img.c) {
      (void)v;
      CHECK(m.sys.root(m.root_of(k)).height == m.sys.root(r).height + 1);
    }
  }
}
