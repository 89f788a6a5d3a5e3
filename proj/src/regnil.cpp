#include "liedeform/regnil.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace liedeform {

std::multiset<int> exponents_of(LieType t, int rank) {
  std::multiset<int> e;
  switch (t) {
    case LieType::A:
      for (int i = 1; i <= rank; ++i) e.insert(i);
      break;
    case LieType::B:
    case LieType::C:
      for (int k = 1; k <= rank; ++k) e.insert(2 * k - 1);
      break;
    case LieType::D:
      for (int k = 1; k <= rank - 1; ++k) e.insert(2 * k - 1);
      e.insert(rank - 1);
      break;
    case LieType::G2: return {1, 5};
    case LieType::F4: return {1, 5, 7, 11};
    case LieType::E6: return {1, 4, 5, 7, 8, 11};
    case LieType::E7: return {1, 5, 7, 9, 11, 13, 17};
    case LieType::E8: return {1, 7, 11, 13, 17, 19, 23, 29};
  }
  return e;
}

namespace {

int row_height(const QVec& v, const LieModel& m) {
  int h = -1;
  for (int k = 0; k < m.dim(); ++k) {
    if (v[k] == 0) continue;
    check(m.is_xindex(k), "graded vector with Cartan support");
    int hk = m.sys.root(m.root_of(k)).height;
    check(h < 0 || h == hk, "vector mixes heights");
    h = hk;
  }
  check(h > 0, "zero vector has no height");
  return h;
}

std::vector<int> roots_of_height(const RootSystem& sys, int h) {
  std::vector<int> out;
  for (int r = 0; r < sys.count(); ++r)
    if (sys.root(r).height == h) out.push_back(r);
  return out;
}

}  // namespace

JordanData jordan_subalgebra(const LieModel& m) {
  const RootSystem& sys = m.sys;
  int cnt = sys.count();
  JordanData jd;
  jd.lambda = m.regular_nilpotent();
  // ad Lambda restricted to n, as a cnt x cnt matrix
  QMatrix ad(cnt, cnt);
  for (int b = 0; b < cnt; ++b)
    for (int i = 0; i < sys.rank; ++i) {
      int ai = sys.simple_index(i);
      int s = sys.sum(ai, b);
      if (s >= 0) ad(s, b) += m.nmat[ai][b];
    }
  auto ker = kernel(ad);
  check(static_cast<int>(ker.size()) == sys.rank, "centralizer dimension is not the rank");
  std::vector<QVec> rows;
  for (const auto& kv : ker) {
    QVec v(m.dim(), Rational(0));
    for (int r = 0; r < cnt; ++r) v[m.xindex(r)] = kv[r];
    rows.push_back(std::move(v));
  }
  jd.span = Subspace::from_rows(std::move(rows), m.dim());
  for (const QVec& row : jd.span.basis) {
    jd.basis.push_back(from_vec(row, m));
    jd.heights.insert(row_height(row, m));
  }
  check(jd.heights == exponents_of(sys.type, sys.rank), "centralizer heights are not the exponents");
  for (const Element& v : jd.basis)
    check(m.bracket(jd.lambda, v).is_zero(), "centralizer vector does not commute");
  for (const Element& u : jd.basis)
    for (const Element& v : jd.basis)
      check(m.bracket(u, v).is_zero(), "centralizer is not abelian");
  if (sys.type == LieType::D) {
    // Z spans, together with Lambda^(n-1)-type vectors, the height n-1 part
    const MatrixRealization* mr = realization_for(sys.type, sys.rank);
    check(mr != nullptr, "type D needs the matrix realization");
    int n = sys.rank, N = 2 * n;
    QMatrix zm(N, N);
    zm(0, n - 1) = 1;
    zm(n, 2 * n - 1) = -1;
    zm(0, n) = -1;
    zm(n - 1, 2 * n - 1) = 1;
    jd.z = mr->decompose(m, zm);
    check(m.bracket(jd.lambda, *jd.z).is_zero(), "Z does not commute with Lambda");
    check(jd.span.contains(*jd.z, m), "Z outside the centralizer");
  }
  return jd;
}

Element build_S(const LieModel& m, const MatrixRealization& mr) {
  const RootSystem& sys = m.sys;
  int n = sys.rank;
  int N = mr.size;
  QMatrix s(N, N);
  auto E = [&](int i, int j, const Rational& c) { s(i - 1, j - 1) += c; };
  switch (sys.type) {
    case LieType::A:
      return Element{};
    case LieType::B: {
      auto tl = [&](int i, int j, const Rational& c) {  // E_{i,j} - E_{2n+2-j,2n+2-i}
        E(i, j, c);
        E(2 * n + 2 - j, 2 * n + 2 - i, -c);
      };
      if (n % 2 == 1) {
        int mm = (n - 1) / 2;
        for (int i = 1; i <= mm + 1; ++i) tl(i, n + i, rat(i));
      } else {
        int mm = n / 2;
        for (int i = 1; i <= mm + 1; ++i) tl(i, i + n - 1, rat(i));
      }
      break;
    }
    case LieType::C: {
      if (n % 2 == 1) {
        for (int i = 1; i <= n; ++i) E(i, n + i, rat(-1, 2));
      } else {
        E(1, n, rat(1, 2));
        for (int i = 1; i <= n - 1; ++i) E(i + 1, n + i, rat(-1, 2));
        E(n + 1, 2 * n, rat(-1, 2));
      }
      break;
    }
    case LieType::D: {
      auto tl = [&](int i, int j, const Rational& c) {  // E_{i,j} - E_{2n+1-j,2n+1-i}
        E(i, j, c);
        E(2 * n + 1 - j, 2 * n + 1 - i, -c);
      };
      if (n % 2 == 1) {
        tl(1, n - 1, rat(2));
        tl(2, n, rat(1));
        tl(2, n + 1, rat(1));
        for (int i = 3; i <= (n + 1) / 2; ++i) tl(i, i + n - 1, rat(-i));
      } else {
        for (int i = 1; i <= n / 2; ++i) tl(i, i + n, rat(-i));
      }
      break;
    }
    default: throw std::runtime_error("deformation direction is defined for classical types");
  }
  return mr.decompose(m, s);
}

std::vector<Element> KBasis::generators() const {
  std::vector<Element> out;
  if (z) out.push_back(*z);
  for (auto& [h, e] : by_height) out.push_back(e);
  return out;
}

namespace {

// split the reduced basis of a graded subspace into height blocks
std::map<int, std::vector<QVec>> height_blocks(const Subspace& s, const LieModel& m) {
  std::map<int, std::vector<QVec>> blocks;
  for (const QVec& row : s.basis) blocks[row_height(row, m)].push_back(row);
  return blocks;
}

bool full_support_at_height(const Element& e, int h, const LieModel& m) {
  for (int r : roots_of_height(m.sys, h))
    if (e.coeff(m.xindex(r)) == 0) return false;
  for (auto& [k, c] : e.c) {
    (void)c;
    if (!m.is_xindex(k) || m.sys.root(m.root_of(k)).height != h) return false;
  }
  return true;
}

KBasis extract_kbasis(const LieModel& m, const Subspace& span, const std::optional<Element>& z_elem) {
  const RootSystem& sys = m.sys;
  KBasis k;
  k.span = span;
  int top = sys.root(sys.maximal).height;
  bool is_d = sys.type == LieType::D;
  k.max_height = top;
  k.min_height = is_d ? top - (sys.rank - 2) : top - (sys.rank - 1);
  auto blocks = height_blocks(span, m);
  for (auto& [h, rows] : blocks) {
    check(h >= k.min_height && h <= k.max_height, "K has support outside the height window");
    if (is_d && h == k.min_height && rows.size() == 2) {
      check(z_elem.has_value(), "type D needs Z");
      QVec zv = to_vec(*z_elem, m);
      check(in_row_span(rows, zv, m.dim()), "Z missing from the bottom height block");
      k.z = *z_elem;
      // pick the companion v + c Z with full support; the independence
      // condition is insensitive to c, so only full support is searched
      QVec v = rows[0];
      if (row_space({v}, m.dim()) == row_space({zv}, m.dim())) v = rows[1];
      for (int attempt = 0;; ++attempt) {
        check(attempt < 64, "degenerate parameter choice");
        int c = (attempt % 2 == 0) ? attempt / 2 : -(attempt + 1) / 2;
        QVec cand(m.dim());
        for (int j = 0; j < m.dim(); ++j) cand[j] = v[j] + rat(c) * zv[j];
        Element e = from_vec(cand, m);
        if (full_support_at_height(e, h, m)) {
          k.by_height[h] = e;
          break;
        }
      }
      continue;
    }
    check(rows.size() == 1, "unexpected block dimension in K");
    Element e = from_vec(rows[0], m);
    check(full_support_at_height(e, h, m), "degenerate parameter choice");
    k.by_height[h] = e;
  }
  for (int h = k.min_height; h <= k.max_height; ++h)
    check(k.by_height.count(h), "K misses a covered height");
  check(is_d ? k.z.has_value() : !k.z.has_value(), "Z bookkeeping mismatch");
  return k;
}

struct ScriptStep {
  std::vector<std::string> labels;  // one root, or two for a searched pair
};

std::vector<ScriptStep> k_script(LieType t) {
  switch (t) {
    case LieType::G2: return {{{"21"}}};
    case LieType::F4: return {{{"1242"}}, {{"0121"}}, {{"0001"}}};
    case LieType::E6: return {{{"11111/0", "01210/1"}}};
    case LieType::E7: return {{{"124321/2"}}, {{"123210/1"}}, {{"012210/1"}}, {{"001100/1", "111000/0"}}};
    case LieType::E8:
      // the third and fourth directions are pinned by the intermediate
      // generator lists they must produce: the consumed generator plus the
      // direction height must land on the new unit root
      return {{{"2465421/3"}}, {{"2343321/2"}}, {{"1233221/1"}}, {{"1232111/1"}}, {{"1111110/1"}},
              {{"0011100/0", "0110000/1"}}};
    default: return {};
  }
}

const std::vector<std::pair<int, int>> kAbCandidates = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}};

// Candidates for the searched degeneration direction: the stated pair with
// small coefficient ratios first, then small combinations of root vectors
// of the same height.  The stated pair is structurally degenerate in one
// case (its image misses a graded component whose only bracket route runs
// through a coefficient that is exactly zero), so the fallback keeps the
// height of the step and nothing else.
std::vector<std::pair<Element, std::string>> search_candidates(const LieModel& m,
                                                               const ScriptStep& st) {
  const RootSystem& sys = m.sys;
  std::vector<std::pair<Element, std::string>> out;
  int r0 = sys.parse_label(st.labels[0]), r1 = sys.parse_label(st.labels[1]);
  for (auto& ab : kAbCandidates)
    out.emplace_back(m.x(r0) * rat(ab.first) + m.x(r1) * rat(ab.second),
                     std::to_string(ab.first) + "*X_" + st.labels[0] + " + " +
                         std::to_string(ab.second) + "*X_" + st.labels[1]);
  int h = sys.root(r0).height;
  check(sys.root(r1).height == h, "searched pair of mixed heights");
  std::vector<int> at_h;
  for (int r = 0; r < sys.count(); ++r)
    if (sys.root(r).height == h) at_h.push_back(r);
  const std::vector<Rational> coeffs{rat(1), rat(-1), rat(2), rat(-2)};
  auto emit = [&](const std::vector<int>& pickidx, const std::vector<int>& cidx) {
    Element e;
    std::string desc;
    for (size_t q = 0; q < pickidx.size(); ++q) {
      e += m.x(at_h[pickidx[q]]) * coeffs[cidx[q]];
      desc += (q ? " + " : "") + to_string(coeffs[cidx[q]]) + "*X_" + sys.label(at_h[pickidx[q]]);
    }
    out.emplace_back(std::move(e), std::move(desc));
  };
  int nh = static_cast<int>(at_h.size());
  for (int size = 2; size <= 3 && size <= nh; ++size) {
    std::vector<int> pick(size);
    std::function<void(int, int)> choose = [&](int from, int got) {
      if (got == size) {
        std::vector<int> cidx(size, 0);
        for (;;) {
          emit(pick, cidx);
          int q = size - 1;
          while (q >= 0 && cidx[q] == 3) cidx[q--] = 0;
          if (q < 0) break;
          ++cidx[q];
        }
        return;
      }
      for (int i = from; i < nh; ++i) {
        pick[got] = i;
        choose(i + 1, got + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

}  // namespace

KBasis build_K(const LieModel& m, const MatrixRealization* mr, const JordanData& jd) {
  const RootSystem& sys = m.sys;
  if (sys.type == LieType::A) {
    KBasis k = extract_kbasis(m, jd.span, std::nullopt);
    return k;
  }
  if (is_classical(sys.type)) {
    check(mr != nullptr, "classical types need the matrix realization");
    Element s = build_S(m, *mr);
    Subspace lim = subspace_limit(apply_unipotent(jd.span, s, m));
    KBasis k = extract_kbasis(m, lim, jd.z);
    k.steps.push_back({s, "unipotent limit along the appendix direction"});
    return k;
  }
  auto script = k_script(sys.type);
  auto run = [&](const Element& pair_dir, const std::string& pair_desc) {
    Subspace cur = jd.span;
    KBasis k;
    for (const auto& st : script) {
      Element dir;
      std::string desc;
      if (st.labels.size() == 1) {
        dir = m.x(sys.parse_label(st.labels[0]));
        desc = "unipotent X_" + st.labels[0];
      } else {
        dir = pair_dir;
        desc = "unipotent " + pair_desc;
      }
      cur = subspace_limit(apply_unipotent(cur, dir, m));
      k.steps.push_back({dir, desc});
    }
    KBasis out = extract_kbasis(m, cur, std::nullopt);
    out.steps = k.steps;
    return out;
  };
  const ScriptStep* pair_step = nullptr;
  for (auto& st : script)
    if (st.labels.size() == 2) pair_step = &st;
  if (!pair_step) return run(Element{}, "");
  std::string last;
  for (auto& [dir, desc] : search_candidates(m, *pair_step)) {
    try {
      return run(dir, desc);
    } catch (const std::exception& e) {
      last = e.what();
    }
  }
  throw std::runtime_error("degenerate parameter choice: " + last);
}

void check_kbasis(const LieModel& m, const KBasis& k) {
  const RootSystem& sys = m.sys;
  check(k.span.dimension() == sys.rank, "K dimension is not the rank");
  for (int h = k.min_height; h <= k.max_height; ++h) {
    auto it = k.by_height.find(h);
    check(it != k.by_height.end(), "K misses height " + std::to_string(h));
    check(full_support_at_height(it->second, h, m), "K generator not fully supported at height " + std::to_string(h));
    check(k.span.contains(it->second, m), "K generator outside the span");
  }
  auto gens = k.generators();
  for (const Element& u : gens)
    for (const Element& v : gens) check(m.bracket(u, v).is_zero(), "K is not abelian");
  if (sys.type == LieType::D) {
    check(k.z.has_value(), "type D K needs Z");
    int n = sys.rank;
    int rm = sys.eps_minus(1, n), rp = sys.eps_plus(1, n);
    check(rm >= 0 && rp >= 0, "missing epsilon roots");
    const Element& lam = k.by_height.at(k.min_height);
    Rational zm = k.z->coeff(m.xindex(rm)), zp = k.z->coeff(m.xindex(rp));
    Rational cm = lam.coeff(m.xindex(rm)), cp = lam.coeff(m.xindex(rp));
    check(zm * cp - zp * cm != 0, "Z and the extreme pair of Lambda are dependent");
  }
}

std::vector<Element> predicted_K_classical(const LieModel& m, const MatrixRealization& mr) {
  const RootSystem& sys = m.sys;
  int n = sys.rank;
  check(is_classical(sys.type) && sys.type != LieType::A, "predicted K for types B, C, D");
  Element s_elem = build_S(m, mr);
  QMatrix S = mr.to_matrix(m, s_elem);
  QMatrix L = mr.to_matrix(m, m.regular_nilpotent());
  std::vector<QMatrix> pw{QMatrix::identity(mr.size)};
  for (int k = 1; k <= 2 * n; ++k) pw.push_back(pw.back() * L);
  std::vector<QMatrix> gens;
  switch (sys.type) {
    case LieType::B:
      for (int l = n; l <= 2 * n - 1; ++l) {
        if (l % 2 == 1)
          gens.push_back(pw[l]);
        else
          gens.push_back(commutator(S, pw[l - (n % 2 == 1 ? n : n - 1)]));
      }
      break;
    case LieType::C: {
      auto block = [&](const QMatrix& a) {  // embed an n x n block upper right
        QMatrix o(2 * n, 2 * n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) o(i, n + j) = a(i, j);
        return o;
      };
      QMatrix la(n, n);
      for (int i = 0; i + 1 < n; ++i) la(i, i + 1) = 1;
      std::vector<QMatrix> lap{QMatrix::identity(n)};
      for (int k = 1; k <= n; ++k) lap.push_back(lap.back() * la);
      if (n % 2 == 1) {
        for (int k = (n + 1) / 2; k <= n; ++k) gens.push_back(pw[2 * k - 1]);
        for (int k = 1; k <= (n - 1) / 2; ++k) gens.push_back(block(lap[2 * k - 1]));
      } else {
        for (int k = n / 2 + 1; k <= n; ++k) gens.push_back(pw[2 * k - 1]);
        for (int k = 1; k <= n / 2; ++k) gens.push_back(block(lap[2 * k - 2]));
      }
      break;
    }
    case LieType::D: {
      QMatrix zm(2 * n, 2 * n);
      zm(0, n - 1) = 1;
      zm(n, 2 * n - 1) = -1;
      zm(0, n) = -1;
      zm(n - 1, 2 * n - 1) = 1;
      gens.push_back(zm);
      for (int l = n - 1; l <= 2 * n - 3; ++l) {
        if (l % 2 == 1)
          gens.push_back(pw[l]);
        else
          gens.push_back(commutator(S, pw[l - (n % 2 == 1 ? n - 2 : n - 1)]));
      }
      break;
    }
    default: break;
  }
  std::vector<Element> out;
  for (const QMatrix& g : gens) {
    check(!g.is_zero(), "predicted generator vanished");
    out.push_back(mr.decompose(m, g));
  }
  return out;
}

}  // namespace liedeform
