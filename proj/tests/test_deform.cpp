#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "liedeform/deform.hpp"
#include "liedeform/regnil.hpp"

using namespace liedeform;

namespace {
std::mt19937 rng(90125);

LaurentPoly random_laurent(int terms = 3, int span = 4) {
  std::uniform_int_distribution<int> e(-3, 3), c(-span, span);
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) p += LaurentPoly(rat(c(rng)), e(rng));
  return p;
}
}  // namespace

TEST_CASE("commuting direction gives a constant family") {
  const LieModel& m = model_for(LieType::A, 3);
  // the highest root vector commutes with every positive root vector
  Subspace s = Subspace::from_elements({m.x(m.sys.maximal)}, m);
  auto fam = apply_unipotent(s, m.sys.maximal, m);
  for (const auto& g : fam.gens)
    for (const auto& p : g)
      if (!p.is_zero()) CHECK(p.degree() == 0);
  CHECK(subspace_limit(fam) == s);
}

TEST_CASE("toric zero vector is constant and lines are stable") {
  const LieModel& m = model_for(LieType::B, 3);
  Subspace s = Subspace::from_elements({m.x(2), m.x(5)}, m);
  CHECK(subspace_limit(apply_toric(s, {0, 0, 0}, m)) == s);
  Subspace line = Subspace::from_elements({m.x(4)}, m);
  CHECK(subspace_limit(apply_toric(line, {3, -1, 2}, m)) == line);
}

TEST_CASE("limit of a constant family is itself") {
  const LieModel& m = model_for(LieType::C, 3);
  const JordanData jd = jordan_subalgebra(m);
  auto fam = apply_toric(jd.span, {0, 0, 0}, m);
  CHECK(subspace_limit(fam) == jd.span);
}

TEST_CASE("cartan limit along the regular nilpotent is the centralizer") {
  for (auto cfg : std::vector<std::pair<LieType, int>>{{LieType::A, 2}, {LieType::A, 4},
                                                        {LieType::B, 3}, {LieType::G2, 2}}) {
    const LieModel& m = model_for(cfg.first, cfg.second);
    JordanData jd = jordan_subalgebra(m);
    Subspace lim = subspace_limit(apply_unipotent(Subspace::cartan(m), jd.lambda, m));
    CHECK(lim == jd.span);
    if (cfg.first == LieType::G2) {
      Subspace expect = Subspace::from_elements({jd.lambda, m.x(m.sys.parse_label("32"))}, m);
      CHECK(lim == expect);
    }
  }
}

TEST_CASE("element tracking: a family member with unit limit lands in the limit") {
  const LieModel& m = model_for(LieType::B, 3);
  JordanData jd = jordan_subalgebra(m);
  Element s = m.x(m.sys.eps_plus(1, 3));
  auto fam = apply_unipotent(jd.span, s, m);
  Subspace lim = subspace_limit(fam);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int it = 0; it < 40; ++it) {
    // random rational combination of the family generators, tracked to t=0
    LaurentVec v(m.dim());
    for (const auto& g : fam.gens) {
      Rational coef = rat(c(rng), 1 + std::abs(c(rng)));
      for (int j = 0; j < m.dim(); ++j) v[j] += coef * g[j];
    }
    bool zero = true;
    for (auto& p : v) zero &= p.is_zero();
    if (zero) continue;
    auto [shift, w] = laurent_normalize(v);
    (void)shift;
    QVec at0(m.dim());
    for (int j = 0; j < m.dim(); ++j) at0[j] = w[j].at_zero();
    CHECK(lim.contains(at0));
  }
}

TEST_CASE("limit is invariant under invertible generator mixing") {
  const LieModel& m = model_for(LieType::C, 3);
  JordanData jd = jordan_subalgebra(m);
  Element s = m.x(m.sys.eps_double(2));
  auto fam = apply_unipotent(jd.span, s, m);
  Subspace lim = subspace_limit(fam);
  int k = static_cast<int>(fam.gens.size());
  int done = 0;
  while (done < 50) {
    // random Laurent matrix, kept when invertible at t = 1
    std::vector<std::vector<LaurentPoly>> mix(k, std::vector<LaurentPoly>(k));
    QMatrix at1(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        mix[i][j] = random_laurent(2, 2);
        at1(i, j) = mix[i][j].eval(rat(1));
      }
    if (rref(at1).rank != k || laurent_det(mix).is_zero()) continue;
    ++done;
    SubspaceFamily mixed;
    mixed.ambient = fam.ambient;
    mixed.gens.assign(k, LaurentVec(fam.ambient));
    for (int i = 0; i < k; ++i)
      for (int q = 0; q < k; ++q) {
        if (mix[i][q].is_zero()) continue;
        for (int j = 0; j < fam.ambient; ++j)
          if (!fam.gens[q][j].is_zero()) mixed.gens[i][j] += mix[i][q] * fam.gens[q][j];
      }
    CHECK(subspace_limit(mixed) == lim);
  }
}

TEST_CASE("unipotent maps are bracket automorphisms over Laurent coefficients") {
  const LieModel& m = model_for(LieType::B, 3);
  QMatrix ad = ad_matrix(m.x(m.sys.eps_single(2)), m);
  int bound = m.sys.root(m.sys.maximal).height + 1;
  auto transform = [&](const LaurentVec& v) {
    LaurentVec out = v, cur = v;
    Rational fact(1);
    for (int k = 1; k <= bound; ++k) {
      cur = ad_apply(ad, cur);
      bool zero = true;
      for (auto& p : cur) zero &= p.is_zero();
      if (zero) break;
      fact *= k;
      for (int j = 0; j < m.dim(); ++j)
        if (!cur[j].is_zero()) out[j] += (1 / fact) * cur[j].shifted(-k);
    }
    return out;
  };
  std::uniform_int_distribution<int> pick(0, m.sys.count() - 1), c(-2, 2);
  for (int it = 0; it < 100; ++it) {
    LaurentVec x(m.dim()), y(m.dim());
    for (int q = 0; q < 3; ++q) {
      x[m.xindex(pick(rng))] += LaurentPoly(rat(c(rng)), c(rng));
      y[m.xindex(pick(rng))] += LaurentPoly(rat(c(rng)), c(rng));
    }
    LaurentVec lhs = transform(bracket_laurent(x, y, m));
    LaurentVec rhs = bracket_laurent(transform(x), transform(y), m);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("unipotent inverse restores the generators") {
  const LieModel& m = model_for(LieType::D, 4);
  JordanData jd = jordan_subalgebra(m);
  Element dir = m.x(m.sys.eps_plus(2, 4));
  auto fam = apply_unipotent(jd.span, dir, m);
  QMatrix ad = ad_matrix(-dir, m);
  int bound = m.sys.root(m.sys.maximal).height + 1;
  for (size_t g = 0; g < fam.gens.size(); ++g) {
    LaurentVec v = fam.gens[g], cur = fam.gens[g];
    Rational fact(1);
    for (int k = 1; k <= bound; ++k) {
      cur = ad_apply(ad, cur);
      bool zero = true;
      for (auto& p : cur) zero &= p.is_zero();
      if (zero) break;
      fact *= k;
      for (int j = 0; j < m.dim(); ++j)
        if (!cur[j].is_zero()) v[j] += (1 / fact) * cur[j].shifted(-k);
    }
    QVec orig = jd.span.basis[g];
    for (int j = 0; j < m.dim(); ++j) {
      if (orig[j] == 0)
        CHECK(v[j].is_zero());
      else
        CHECK(v[j] == LaurentPoly(orig[j]));
    }
  }
}

TEST_CASE("limit dimension equals the generator count") {
  const LieModel& m = model_for(LieType::B, 4);
  JordanData jd = jordan_subalgebra(m);
  for (int r : {0, 3, 7}) {
    Subspace lim = subspace_limit(apply_unipotent(jd.span, m.x(r), m));
    CHECK(lim.dimension() == jd.span.dimension());
  }
}

TEST_CASE("sp(6) worked family coefficients") {
  // exp(t^-1 ad E_25) sends the shift generator to Lambda - t^-1 (E_15 + E_26)
  const LieModel& m = model_for(LieType::C, 3);
  const MatrixRealization* mr = realization_for(LieType::C, 3);
  JordanData jd = jordan_subalgebra(m);
  QMatrix e25(6, 6);
  e25(1, 4) = 1;
  auto fam = apply_unipotent(jd.span, mr->decompose(m, e25), m);
  // the height-one generator row is Lambda itself
  int lam_row = -1;
  for (size_t i = 0; i < fam.gens.size(); ++i)
    if (from_vec(jd.span.basis[i], m) == jd.lambda) lam_row = static_cast<int>(i);
  REQUIRE(lam_row >= 0);
  QMatrix img(6, 6);
  img(0, 4) = -1;
  img(1, 5) = -1;
  Element expect_pole = mr->decompose(m, img);
  for (int k = 0; k < m.dim(); ++k) {
    const LaurentPoly& p = fam.gens[lam_row][k];
    CHECK(p.coeff(0) == jd.lambda.coeff(k));
    CHECK(p.coeff(-1) == expect_pole.coeff(k));
    if (!p.is_zero()) CHECK(p.valuation() >= -1);
  }
}

TEST_CASE("sequential torus limits compose lexicographically") {
  // taking the limit along m and then along m' equals one limit along
  // N m + m' once N dominates every weight gap
  const LieModel& m = model_for(LieType::C, 3);
  JordanData jd = jordan_subalgebra(m);
  std::uniform_int_distribution<int> c(-2, 2);
  std::vector<Subspace> starts{jd.span, subspace_limit(apply_unipotent(jd.span, m.x(m.sys.eps_double(2)), m))};
  for (const Subspace& s : starts)
    for (int it = 0; it < 20; ++it) {
      std::vector<int> m1(3), m2(3), big(3);
      for (int j = 0; j < 3; ++j) {
        m1[j] = c(rng);
        m2[j] = c(rng);
        big[j] = 1000 * m1[j] + m2[j];
      }
      Subspace two = subspace_limit(apply_toric(subspace_limit(apply_toric(s, m1, m)), m2, m));
      Subspace one = subspace_limit(apply_toric(s, big, m));
      CHECK(two == one);
    }
}
