#include "liedeform/deform.hpp"

#include <algorithm>

namespace liedeform {

QVec to_vec(const Element& e, const LieModel& m) {
  QVec v(m.dim(), Rational(0));
  for (auto& [k, c] : e.c) v[k] = c;
  return v;
}

Element from_vec(const QVec& v, const LieModel& m) {
  Element e;
  for (int k = 0; k < m.dim(); ++k) e.add(k, v[k]);
  return e;
}

bool Subspace::contains(const Element& e, const LieModel& m) const { return contains(to_vec(e, m)); }

Subspace Subspace::from_rows(std::vector<QVec> rows, int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = row_space(rows, ambient);
  return s;
}

Subspace Subspace::from_elements(const std::vector<Element>& gens, const LieModel& m) {
  std::vector<QVec> rows;
  rows.reserve(gens.size());
  for (const Element& e : gens) rows.push_back(to_vec(e, m));
  return from_rows(std::move(rows), m.dim());
}

Subspace Subspace::cartan(const LieModel& m) {
  std::vector<QVec> rows;
  for (int i = 0; i < m.sys.rank; ++i) {
    QVec v(m.dim(), Rational(0));
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  return from_rows(std::move(rows), m.dim());
}

std::vector<Element> Subspace::elements(const LieModel& m) const {
  std::vector<Element> out;
  for (const QVec& r : basis) out.push_back(from_vec(r, m));
  return out;
}

std::vector<QVec> SubspaceFamily::eval(const Rational& t0) const {
  std::vector<QVec> out;
  for (const auto& g : gens) {
    QVec row;
    row.reserve(ambient);
    for (const auto& p : g) row.push_back(p.eval(t0));
    out.push_back(std::move(row));
  }
  return out;
}

SubspaceFamily SubspaceFamily::make(std::vector<LaurentVec> gens, int ambient) {
  SubspaceFamily f;
  f.ambient = ambient;
  f.gens = std::move(gens);
  for (auto& g : f.gens) check(static_cast<int>(g.size()) == ambient, "family generator length");
  bool ok = false;
  for (long t0 = 1; t0 <= 3 && !ok; ++t0)
    ok = static_cast<int>(row_space(f.eval(rat(t0)), ambient).size()) == static_cast<int>(f.gens.size());
  check(ok, "family generators dependent at generic t");
  return f;
}

QMatrix ad_matrix(const Element& s, const LieModel& m) {
  int d = m.dim();
  QMatrix a(d, d);
  for (int k = 0; k < d; ++k) {
    Element basis_vec;
    basis_vec.c[k] = 1;
    Element img = m.bracket(s, basis_vec);
    for (auto& [j, c] : img.c) a(j, k) += c;
  }
  return a;
}

LaurentVec ad_apply(const QMatrix& admat, const LaurentVec& v) {
  int d = admat.rows();
  LaurentVec out(d);
  for (int i = 0; i < d; ++i) {
    LaurentPoly acc;
    for (int j = 0; j < d; ++j) {
      if (admat(i, j) == 0 || v[j].is_zero()) continue;
      acc += admat(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

LaurentVec bracket_laurent(const LaurentVec& a, const LaurentVec& b, const LieModel& m) {
  int d = m.dim();
  LaurentVec out(d);
  for (int ka = 0; ka < d; ++ka) {
    if (a[ka].is_zero()) continue;
    for (int kb = 0; kb < d; ++kb) {
      if (b[kb].is_zero()) continue;
      Element ea, eb;
      ea.c[ka] = 1;
      eb.c[kb] = 1;
      Element br = m.bracket(ea, eb);
      for (auto& [j, c] : br.c) out[j] += c * (a[ka] * b[kb]);
    }
  }
  return out;
}

SubspaceFamily apply_unipotent(const Subspace& s, const Element& x, const LieModel& m) {
  // sparse column entries of ad(x)
  std::vector<std::vector<std::pair<int, Rational>>> cols(m.dim());
  for (int k = 0; k < m.dim(); ++k) {
    Element basis_vec;
    basis_vec.c[k] = 1;
    Element img = m.bracket(x, basis_vec);
    for (auto& [j, c] : img.c) cols[k].emplace_back(j, c);
  }
  int bound = m.sys.root(m.sys.maximal).height + 1;  // ad is nilpotent on b
  std::vector<LaurentVec> gens;
  for (const QVec& row : s.basis) {
    LaurentVec out(m.dim());
    for (int i = 0; i < m.dim(); ++i) out[i] = LaurentPoly(row[i]);
    std::map<int, Rational> cur;
    for (int i = 0; i < m.dim(); ++i)
      if (row[i] != 0) cur[i] = row[i];
    Rational fact(1);
    for (int k = 1; !cur.empty(); ++k) {
      check(k <= bound, "unipotent series did not terminate");
      std::map<int, Rational> nxt;
      for (auto& [j, v] : cur)
        for (auto& [i, a] : cols[j]) {
          auto [it, fresh] = nxt.emplace(i, a * v);
          if (!fresh) it->second += a * v;
        }
      for (auto it = nxt.begin(); it != nxt.end();)
        it = (it->second == 0) ? nxt.erase(it) : std::next(it);
      fact *= k;
      for (auto& [i, v] : nxt) out[i] += LaurentPoly(v / fact, -k);
      cur = std::move(nxt);
    }
    gens.push_back(std::move(out));
  }
  return SubspaceFamily::make(std::move(gens), m.dim());
}

SubspaceFamily apply_toric(const Subspace& s, const std::vector<int>& m_vec, const LieModel& m) {
  std::vector<LaurentVec> gens;
  for (const QVec& row : s.basis) {
    LaurentVec g(m.dim());
    for (int k = 0; k < m.dim(); ++k) {
      if (row[k] == 0) continue;
      int e = m.is_xindex(k) ? static_cast<int>(m.sys.pairing(m_vec, m.root_of(k))) : 0;
      g[k] = LaurentPoly(row[k], e);
    }
    gens.push_back(std::move(g));
  }
  return SubspaceFamily::make(std::move(gens), m.dim());
}

SubspaceFamily apply_diag_weights(const Subspace& s, const std::vector<int>& w, const LieModel& m) {
  check(is_classical(m.sys.type), "diagonal weights need epsilon coordinates");
  std::vector<LaurentVec> gens;
  for (const QVec& row : s.basis) {
    LaurentVec g(m.dim());
    for (int k = 0; k < m.dim(); ++k) {
      if (row[k] == 0) continue;
      int e = 0;
      if (m.is_xindex(k)) {
        const auto& eps = m.sys.root(m.root_of(k)).eps;
        check(eps.size() == w.size(), "weight vector length");
        for (size_t j = 0; j < eps.size(); ++j) e += eps[j] * w[j];
      }
      g[k] = LaurentPoly(row[k], e);
    }
    gens.push_back(std::move(g));
  }
  return SubspaceFamily::make(std::move(gens), m.dim());
}

Subspace apply_root_permutation(const Subspace& s, const std::vector<int>& perm, const LieModel& m) {
  std::vector<QVec> rows;
  for (const QVec& row : s.basis) {
    QVec out(m.dim(), Rational(0));
    for (int k = 0; k < m.dim(); ++k) {
      if (row[k] == 0) continue;
      check(m.is_xindex(k), "permutation step acts on root coordinates");
      int target = perm[m.root_of(k)];
      check(target >= 0, "permutation maps a root outside the positive system");
      out[m.xindex(target)] += row[k];
    }
    rows.push_back(std::move(out));
  }
  return Subspace::from_rows(std::move(rows), m.dim());
}

namespace {

// Upper bound on the valuation of any nonzero maximal minor of the
// normalized generators: each elimination round lowers that valuation by
// at least one and it stays nonnegative, so the round count is bounded by
// the total degree spread of the rows.
int minor_valuation_bound(const std::vector<LaurentVec>& gens, int /*ambient*/) {
  int bound = 0;
  for (const auto& g : gens) {
    int deg = 0;
    for (const auto& p : g)
      if (!p.is_zero()) deg = std::max(deg, p.degree());
    bound += deg;
  }
  return bound;
}

}  // namespace

Subspace subspace_limit(const SubspaceFamily& f) {
  int ambient = f.ambient;
  int k = static_cast<int>(f.gens.size());
  std::vector<LaurentVec> gens = f.gens;
  for (auto& g : gens) g = laurent_normalize(g).second;

  int budget = minor_valuation_bound(gens, ambient) + 1;
  for (int round = 0;; ++round) {
    check(round <= budget, "limit iteration exceeded the minor valuation bound");
    // evaluate at t = 0
    std::vector<QVec> ev;
    for (const auto& g : gens) {
      QVec row;
      for (const auto& p : g) row.push_back(p.at_zero());
      ev.push_back(std::move(row));
    }
    // rational dependency among the evaluations?
    QMatrix tr(ambient, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < ambient; ++j) tr(j, i) = ev[i][j];
    auto deps = kernel(tr);
    if (deps.empty()) return Subspace::from_rows(std::move(ev), ambient);
    const QVec& c = deps.front();
    int hi = -1;
    for (int i = 0; i < k; ++i)
      if (c[i] != 0) hi = i;
    check(hi >= 0, "empty dependency");
    LaurentVec comb(ambient);
    for (int i = 0; i < k; ++i) {
      if (c[i] == 0) continue;
      for (int j = 0; j < ambient; ++j)
        if (!gens[i][j].is_zero()) comb[j] += c[i] * gens[i][j];
    }
    bool allzero = true;
    for (const auto& p : comb) allzero &= p.is_zero();
    check(!allzero, "rank collapse at generic t");
    auto [shift, normalized] = laurent_normalize(comb);
    check(shift >= 1, "dependency combination did not gain valuation");
    gens[hi] = std::move(normalized);
  }
}

}  // namespace liedeform
