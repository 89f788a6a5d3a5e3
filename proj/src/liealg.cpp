#include "liedeform/liealg.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>

namespace liedeform {

std::string LieModel::basis_label(int k) const {
  if (k < sys.rank) return "H" + std::to_string(k + 1);
  return sys.label(k - sys.rank);
}

int LieModel::parse_basis_label(const std::string& s) const {
  if (!s.empty() && s[0] == 'H' && s.size() > 1 && isdigit(s[1])) {
    int i = std::stoi(s.substr(1));
    check(i >= 1 && i <= sys.rank, "bad Cartan label: " + s);
    return i - 1;
  }
  return xindex(sys.parse_label(s));
}

Element LieModel::regular_nilpotent() const {
  Element e;
  for (int i = 0; i < sys.rank; ++i) e.c[xindex(sys.simple_index(i))] = 1;
  return e;
}

Element LieModel::bracket(const Element& a, const Element& b) const {
  Element out;
  for (auto& [ka, va] : a.c)
    for (auto& [kb, vb] : b.c) {
      bool xa = is_xindex(ka), xb = is_xindex(kb);
      if (!xa && !xb) continue;  // [h, h'] = 0
      if (!xa) {                 // [H_i, X_beta]
        int r = root_of(kb);
        out.add(kb, va * vb * sys.weight(ka, r));
      } else if (!xb) {  // [X_alpha, H_i]
        int r = root_of(ka);
        out.add(ka, -(va * vb * sys.weight(kb, r)));
      } else {
        int ra = root_of(ka), rb = root_of(kb);
        int s = sys.sum(ra, rb);
        if (s >= 0) out.add(xindex(s), va * vb * nmat[ra][rb]);
      }
    }
  return out;
}

Element LieModel::elem(const std::vector<std::pair<std::string, Rational>>& terms) const {
  Element e;
  for (auto& [lab, v] : terms) e.add(parse_basis_label(lab), v);
  return e;
}

std::vector<std::pair<std::string, std::string>> LieModel::serialize(const Element& e) const {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& [k, v] : e.c) out.emplace_back(basis_label(k), to_string(v));
  return out;
}

QMatrix MatrixRealization::to_matrix(const LieModel& m, const Element& e) const {
  QMatrix out(size, size);
  for (auto& [k, v] : e.c) {
    const QMatrix& b = m.is_xindex(k) ? root_mat[m.root_of(k)] : h_mat[k];
    out = out + b * v;
  }
  return out;
}

Element MatrixRealization::decompose(const LieModel& m, const QMatrix& mat) const {
  check(mat.rows() == size && mat.cols() == size, "decompose: wrong matrix size");
  // solve over the basis {H_i, X_r}: columns of A are flattened basis matrices
  int nb = m.dim();
  QMatrix a(size * size, nb + 1);
  for (int k = 0; k < nb; ++k) {
    const QMatrix& b = m.is_xindex(k) ? root_mat[m.root_of(k)] : h_mat[k];
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) a(i * size + j, k) = b(i, j);
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) a(i * size + j, nb) = mat(i, j);
  RrefResult rr = rref(a);
  for (int p : rr.pivots) check(p != nb, "decompose: matrix outside the Borel span");
  Element e;
  for (int r = 0; r < rr.rank; ++r) e.add(rr.pivots[r], rr.reduced(r, nb));
  // verify (the basis is independent, so the solve is exact, but be strict)
  check(to_matrix(m, e) == mat, "decompose: inconsistent solution");
  return e;
}

namespace {

// ---------- sign normalization ----------
// Rescale root vectors by +-1 so that [X_i, X_beta] = (p+1) X_{beta+alpha_i}
// for every simple alpha_i and non-simple beta.  Consistency of the sign
// system is guaranteed for tables coming from a Chevalley basis; the solver
// picks the lexicographically smallest sign vector in canonical root order.
struct SignSystem {
  int nvars;
  // each equation: sorted variable list (mod-2 coefficients) and rhs bit
  std::vector<std::pair<std::vector<int>, int>> eqs;

  bool consistent_with(const std::vector<int>& fixed) const {
    // Gaussian elimination over GF(2); fixed[v] in {-1 (free), 0, 1}
    int words = (nvars + 1 + 63) / 64;
    std::vector<std::vector<uint64_t>> rows;
    auto add_row = [&](const std::vector<int>& vars, int rhs) {
      std::vector<uint64_t> r(words, 0);
      for (int v : vars) r[v / 64] ^= 1ull << (v % 64);
      if (rhs) r[nvars / 64] ^= 1ull << (nvars % 64);
      rows.push_back(std::move(r));
    };
    for (auto& [vars, rhs] : eqs) add_row(vars, rhs);
    for (int v = 0; v < nvars; ++v)
      if (fixed[v] >= 0) add_row({v}, fixed[v]);
    // eliminate
    int rank = 0;
    for (int col = 0; col < nvars && rank < static_cast<int>(rows.size()); ++col) {
      int piv = -1;
      for (int i = rank; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][col / 64] >> (col % 64) & 1) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        if (i != rank && (rows[i][col / 64] >> (col % 64) & 1))
          for (int w = 0; w < words; ++w) rows[i][w] ^= rows[rank][w];
      ++rank;
    }
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      bool lhs_zero = true;
      for (int v = 0; v < nvars && lhs_zero; ++v) lhs_zero = !(rows[i][v / 64] >> (v % 64) & 1);
      if (lhs_zero && (rows[i][nvars / 64] >> (nvars % 64) & 1)) return false;
    }
    return true;
  }

  std::vector<int> solve_lex_min() const {
    std::vector<int> fixed(nvars, -1);
    check(consistent_with(fixed), "sign normalization system inconsistent");
    for (int v = 0; v < nvars; ++v) {
      fixed[v] = 0;
      if (!consistent_with(fixed)) fixed[v] = 1;
    }
    return fixed;
  }
};

void normalize_simple_brackets(LieModel& m, MatrixRealization* mr) {
  const RootSystem& sys = m.sys;
  SignSystem ss;
  ss.nvars = sys.count();
  for (int i = 0; i < sys.rank; ++i) {
    int ai = sys.simple_index(i);
    for (int b = 0; b < sys.count(); ++b) {
      if (sys.is_simple(b)) continue;
      int s = sys.sum(ai, b);
      if (s < 0) continue;
      int p = sys.string_down(i, b);
      Rational n = m.nmat[ai][b];
      check(n == p + 1 || n == -(p + 1),
            "bracket magnitude violates the string normalization at " + sys.label(ai) + ", " + sys.label(b));
      ss.eqs.push_back({{ai, b, s}, n < 0 ? 1 : 0});
    }
  }
  std::vector<int> bits = ss.solve_lex_min();
  std::vector<Rational> u(sys.count());
  for (int r = 0; r < sys.count(); ++r) u[r] = bits[r] ? Rational(-1) : Rational(1);
  for (int a = 0; a < sys.count(); ++a)
    for (int b = 0; b < sys.count(); ++b) {
      int s = sys.sum(a, b);
      if (s >= 0) m.nmat[a][b] *= u[a] * u[b] * u[s];
    }
  if (mr)
    for (int r = 0; r < sys.count(); ++r) mr->root_mat[r] = mr->root_mat[r] * u[r];
}

// ---------- classical realizations ----------

void fill_nmat_from_matrices(LieModel& m, const MatrixRealization& mr) {
  const RootSystem& sys = m.sys;
  int cnt = sys.count();
  m.nmat.assign(cnt, std::vector<Rational>(cnt, Rational(0)));
  for (int a = 0; a < cnt; ++a)
    for (int b = a; b < cnt; ++b) {
      QMatrix c = commutator(mr.root_mat[a], mr.root_mat[b]);
      int s = sys.sum(a, b);
      if (s < 0) {
        check(c.is_zero(), "nonzero bracket outside the root system at " + sys.label(a) + ", " + sys.label(b));
        continue;
      }
      // c must be an exact multiple of the root matrix of a+b
      const QMatrix& x = mr.root_mat[s];
      Rational coef(0);
      for (int i = 0; i < x.rows() && coef == 0; ++i)
        for (int j = 0; j < x.cols() && coef == 0; ++j)
          if (x(i, j) != 0) coef = c(i, j) / x(i, j);
      check(c == x * coef, "bracket not proportional to the target root matrix at " + sys.label(a) + ", " +
                               sys.label(b));
      m.nmat[a][b] = coef;
      m.nmat[b][a] = -coef;
    }
}

std::pair<LieModel, MatrixRealization> build_classical(LieType t, int rank) {
  LieModel m;
  m.sys = RootSystem::build(t, rank);
  const RootSystem& sys = m.sys;
  MatrixRealization mr;
  int n = rank;
  switch (t) {
    case LieType::A: mr.size = n + 1; break;
    case LieType::B: mr.size = 2 * n + 1; break;
    case LieType::C:
    case LieType::D: mr.size = 2 * n; break;
    default: throw std::runtime_error("classical_model: exceptional type");
  }
  int N = mr.size;
  auto E = [&](int i, int j) {  // 1-based unit matrix
    QMatrix e(N, N);
    e(i - 1, j - 1) = 1;
    return e;
  };
  mr.form = QMatrix(N, N);
  if (t == LieType::B || t == LieType::D)
    for (int i = 1; i <= N; ++i) mr.form(i - 1, N - i) = 1;
  if (t == LieType::C)
    for (int i = 1; i <= N; ++i) mr.form(i - 1, N - i) = (i <= n) ? Rational(1) : Rational(-1);

  std::vector<QMatrix> simple(n);
  mr.h_mat.assign(n, QMatrix(N, N));
  auto diag_pm = [&](int i) {  // E_ii - E_{N+1-i,N+1-i}
    QMatrix d(N, N);
    d(i - 1, i - 1) = 1;
    d(N - i, N - i) = -1;
    return d;
  };
  switch (t) {
    case LieType::A:
      for (int i = 1; i <= n; ++i) simple[i - 1] = E(i, i + 1);
      for (int i = 1; i <= n; ++i) {
        mr.h_mat[i - 1] = QMatrix(N, N);
        mr.h_mat[i - 1](i - 1, i - 1) = 1;
        mr.h_mat[i - 1](i, i) = -1;
      }
      break;
    case LieType::B:
      for (int i = 1; i <= n; ++i) simple[i - 1] = E(i, i + 1) - E(2 * n + 1 - i, 2 * n + 2 - i);
      for (int i = 1; i < n; ++i) mr.h_mat[i - 1] = diag_pm(i) - diag_pm(i + 1);
      mr.h_mat[n - 1] = diag_pm(n) * Rational(2);
      break;
    case LieType::C:
      for (int i = 1; i < n; ++i) simple[i - 1] = E(i, i + 1) - E(2 * n - i, 2 * n + 1 - i);
      simple[n - 1] = E(n, n + 1);
      for (int i = 1; i < n; ++i) mr.h_mat[i - 1] = diag_pm(i) - diag_pm(i + 1);
      mr.h_mat[n - 1] = diag_pm(n);
      break;
    case LieType::D:
      for (int i = 1; i < n; ++i) simple[i - 1] = E(i, i + 1) - E(2 * n - i, 2 * n + 1 - i);
      simple[n - 1] = E(n - 1, n + 1) - E(n, n + 2);
      for (int i = 1; i < n; ++i) mr.h_mat[i - 1] = diag_pm(i) - diag_pm(i + 1);
      mr.h_mat[n - 1] = diag_pm(n - 1) + diag_pm(n);
      break;
    default: break;
  }
  // root matrices, built by height
  mr.root_mat.assign(sys.count(), QMatrix());
  for (int i = 0; i < n; ++i) mr.root_mat[sys.simple_index(i)] = simple[i];
  for (int r = 0; r < sys.count(); ++r) {
    const Root& g = sys.root(r);
    if (g.height == 1) continue;
    int pick = -1, lower = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      std::vector<int> c = g.coords;
      c[i] -= 1;
      int idx = (c[i] >= 0) ? sys.index_of(c) : -1;
      if (idx >= 0) {
        pick = i;
        lower = idx;
      }
    }
    check(pick >= 0, "root generation hole");
    int p = sys.string_down(pick, lower);
    mr.root_mat[r] = commutator(simple[pick], mr.root_mat[lower]) * (Rational(1) / (p + 1));
    check(!mr.root_mat[r].is_zero(), "vanishing root matrix");
  }
  // invariants of the realization
  if (t != LieType::A)
    for (int r = 0; r < sys.count(); ++r) {
      const QMatrix& x = mr.root_mat[r];
      check((x.transpose() * mr.form + mr.form * x).is_zero(), "root matrix violates the bilinear form");
    }
  fill_nmat_from_matrices(m, mr);
  // Cartan weights must match the matrix commutators
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < sys.count(); ++r)
      check(commutator(mr.h_mat[i], mr.root_mat[r]) == mr.root_mat[r] * Rational(sys.weight(i, r)),
            "Cartan weight mismatch in the matrix realization");
  normalize_simple_brackets(m, &mr);
  return {std::move(m), std::move(mr)};
}

// ---------- simply-laced bracket tables ----------

// Bimultiplicative asymmetry function from an edge orientation of the
// diagram: eps(a_i, a_j) = -1 iff i == j or i -> j is an oriented edge.
struct Asymmetry {
  int rank;
  std::vector<std::vector<int>> neg;  // neg[i][j] = 1 if eps(a_i,a_j) = -1

  int sign(const std::vector<int>& a, const std::vector<int>& b) const {
    long par = 0;
    for (int i = 0; i < rank; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < rank; ++j)
        if (b[j] != 0 && neg[i][j]) par += static_cast<long>(a[i]) * b[j];
    }
    return (par % 2) ? -1 : 1;
  }
};

Asymmetry make_asymmetry(int rank, const std::vector<std::pair<int, int>>& oriented_edges) {
  Asymmetry a;
  a.rank = rank;
  a.neg.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a.neg[i][i] = 1;
  for (auto& [i, j] : oriented_edges) a.neg[i][j] = 1;
  return a;
}

LieModel simply_laced_model(LieType t, int rank, const std::vector<std::pair<int, int>>& oriented_edges) {
  LieModel m;
  m.sys = RootSystem::build(t, rank);
  Asymmetry eps = make_asymmetry(rank, oriented_edges);
  int cnt = m.sys.count();
  m.nmat.assign(cnt, std::vector<Rational>(cnt, Rational(0)));
  for (int a = 0; a < cnt; ++a)
    for (int b = 0; b < cnt; ++b)
      if (m.sys.sum(a, b) >= 0)
        m.nmat[a][b] = eps.sign(m.sys.root(a).coords, m.sys.root(b).coords);
  return m;
}

// ---------- folded models for G2 and F4 ----------

struct Folding {
  LieType parent_type;
  std::vector<std::pair<int, int>> parent_edges;  // sigma-invariant orientation
  std::vector<int> sigma;                         // permutation of simple indices (0-based)
  // projection of parent simple index -> child simple index
  std::vector<int> proj;
};

LieModel folded_model(LieType child, const Folding& f) {
  LieModel parent = simply_laced_model(f.parent_type, static_cast<int>(f.sigma.size()), f.parent_edges);
  const RootSystem& ps = parent.sys;
  LieModel m;
  m.sys = RootSystem::build(child, fixed_rank(child));
  const RootSystem& cs = m.sys;

  auto sigma_root = [&](int r) {
    std::vector<int> c(ps.rank);
    for (int i = 0; i < ps.rank; ++i) c[f.sigma[i]] = ps.root(r).coords[i];
    int idx = ps.index_of(c);
    check(idx >= 0, "diagram symmetry does not preserve the root system");
    return idx;
  };
  auto project = [&](int r) {
    std::vector<int> c(cs.rank, 0);
    for (int i = 0; i < ps.rank; ++i) c[f.proj[i]] += ps.root(r).coords[i];
    return cs.index_of(c);
  };
  // the orientation must be sigma-invariant so orbit sums close under brackets
  for (int a = 0; a < ps.count(); ++a)
    for (int b = 0; b < ps.count(); ++b) {
      int s = ps.sum(a, b);
      if (s >= 0)
        check(parent.nmat[a][b] == parent.nmat[sigma_root(a)][sigma_root(b)],
              "asymmetry function not symmetry-invariant");
    }
  // orbits of positive parent roots <-> child positive roots
  std::vector<std::vector<int>> orbit_of(cs.count());
  {
    std::vector<bool> used(ps.count(), false);
    for (int r = 0; r < ps.count(); ++r) {
      if (used[r]) continue;
      std::vector<int> orb{r};
      used[r] = true;
      int cur = sigma_root(r);
      while (cur != r) {
        used[cur] = true;
        orb.push_back(cur);
        cur = sigma_root(cur);
      }
      int cr = project(r);
      check(cr >= 0, "orbit projects outside the folded root system");
      for (int x : orb) check(project(x) == cr, "projection not constant on an orbit");
      check(orbit_of[cr].empty(), "two orbits project to one folded root");
      std::sort(orb.begin(), orb.end());
      orbit_of[cr] = orb;
    }
    for (int c = 0; c < cs.count(); ++c) check(!orbit_of[c].empty(), "folded root with no orbit");
  }
  // brackets of orbit sums
  int cnt = cs.count();
  m.nmat.assign(cnt, std::vector<Rational>(cnt, Rational(0)));
  for (int a = 0; a < cnt; ++a)
    for (int b = 0; b < cnt; ++b) {
      int s = cs.sum(a, b);
      std::map<int, Rational> acc;
      for (int pa : orbit_of[a])
        for (int pb : orbit_of[b]) {
          int psum = ps.sum(pa, pb);
          if (psum >= 0) acc[psum] += parent.nmat[pa][pb];
        }
      for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
      if (s < 0) {
        check(acc.empty(), "folded bracket outside the root system");
        continue;
      }
      if (acc.empty()) continue;
      Rational coef;
      bool first = true;
      for (int ts : orbit_of[s]) {
        auto it = acc.find(ts);
        check(it != acc.end(), "folded bracket misses part of the target orbit");
        if (first) {
          coef = it->second;
          first = false;
        } else {
          check(it->second == coef, "folded bracket not an orbit sum");
        }
        acc.erase(it);
      }
      check(acc.empty(), "folded bracket has stray components");
      m.nmat[a][b] = coef;
    }
  return m;
}

LieModel build_exceptional(LieType t) {
  switch (t) {
    case LieType::E6: {
      LieModel m = simply_laced_model(LieType::E6, 6, {{0, 2}, {2, 3}, {1, 3}, {5, 4}, {4, 3}});
      normalize_simple_brackets(m, nullptr);
      return m;
    }
    case LieType::E7: {
      LieModel m =
          simply_laced_model(LieType::E7, 7, {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}});
      normalize_simple_brackets(m, nullptr);
      return m;
    }
    case LieType::E8: {
      LieModel m = simply_laced_model(LieType::E8, 8,
                                      {{0, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
      normalize_simple_brackets(m, nullptr);
      return m;
    }
    case LieType::G2: {
      Folding f;
      f.parent_type = LieType::D;
      f.parent_edges = {{0, 1}, {2, 1}, {3, 1}};  // all arms point at the center
      f.sigma = {2, 1, 3, 0};                     // alpha_1 -> alpha_3 -> alpha_4 -> alpha_1
      f.proj = {0, 1, 0, 0};
      LieModel m = folded_model(LieType::G2, f);
      normalize_simple_brackets(m, nullptr);
      return m;
    }
    case LieType::F4: {
      Folding f;
      f.parent_type = LieType::E6;
      f.parent_edges = {{0, 2}, {2, 3}, {1, 3}, {5, 4}, {4, 3}};
      f.sigma = {5, 1, 4, 3, 2, 0};  // alpha_1 <-> alpha_6, alpha_3 <-> alpha_5
      f.proj = {3, 0, 2, 1, 2, 3};   // E6 -> F4 simple indices
      LieModel m = folded_model(LieType::F4, f);
      normalize_simple_brackets(m, nullptr);
      return m;
    }
    default: throw std::runtime_error("exceptional_model: classical type");
  }
}

}  // namespace

std::pair<LieModel, MatrixRealization> classical_model(LieType t, int rank) {
  check(is_classical(t), "classical_model needs a classical type");
  return build_classical(t, rank);
}

LieModel exceptional_model(LieType t) {
  check(!is_classical(t), "exceptional_model needs an exceptional type");
  return build_exceptional(t);
}

namespace {
struct ModelCache {
  std::mutex mu;
  std::map<std::pair<LieType, int>, std::unique_ptr<std::pair<LieModel, MatrixRealization>>> classical;
  std::map<LieType, std::unique_ptr<LieModel>> exceptional;
};
ModelCache& cache() {
  static ModelCache c;
  return c;
}
}  // namespace

const LieModel& model_for(LieType t, int rank) {
  auto& c = cache();
  std::lock_guard<std::mutex> g(c.mu);
  if (is_classical(t)) {
    auto key = std::make_pair(t, rank);
    auto it = c.classical.find(key);
    if (it == c.classical.end()) {
      auto built = std::make_unique<std::pair<LieModel, MatrixRealization>>(build_classical(t, rank));
      it = c.classical.emplace(key, std::move(built)).first;
    }
    return it->second->first;
  }
  auto it = c.exceptional.find(t);
  if (it == c.exceptional.end())
    it = c.exceptional.emplace(t, std::make_unique<LieModel>(build_exceptional(t))).first;
  return *it->second;
}

const MatrixRealization* realization_for(LieType t, int rank) {
  if (!is_classical(t)) return nullptr;
  auto& c = cache();
  model_for(t, rank);  // populate
  std::lock_guard<std::mutex> g(c.mu);
  return &c.classical.at(std::make_pair(t, rank))->second;
}

bool jacobi_holds(const LieModel& m) {
  const RootSystem& sys = m.sys;
  int cnt = sys.count();
  for (int a = 0; a < cnt; ++a)
    for (int b = a; b < cnt; ++b)
      for (int g = b; g < cnt; ++g) {
        // [a,[b,g]] + [b,[g,a]] + [g,[a,b]] = 0, expanded through the table
        Rational total(0);
        auto term = [&](int x, int y, int z) -> Rational {
          int yz = sys.sum(y, z);
          if (yz < 0) return Rational(0);
          int s = sys.sum(x, yz);
          if (s < 0) return Rational(0);
          return m.nmat[y][z] * m.nmat[x][yz];
        };
        // all brackets land in the same root space when defined
        total = term(a, b, g) + term(b, g, a) + term(g, a, b);
        if (total != 0) return false;
      }
  return true;
}

bool antisymmetry_holds(const LieModel& m) {
  int cnt = m.sys.count();
  for (int a = 0; a < cnt; ++a)
    for (int b = 0; b < cnt; ++b)
      if (m.nmat[a][b] != -m.nmat[b][a]) return false;
  return true;
}

bool simple_bracket_normalization_holds(const LieModel& m) {
  const RootSystem& sys = m.sys;
  for (int i = 0; i < sys.rank; ++i) {
    int ai = sys.simple_index(i);
    for (int b = 0; b < sys.count(); ++b) {
      if (sys.is_simple(b)) continue;
      if (sys.sum(ai, b) < 0) continue;
      int p = sys.string_down(i, b);
      if (m.nmat[ai][b] != p + 1) return false;
    }
  }
  return true;
}

}  // namespace liedeform
