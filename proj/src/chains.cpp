#include "liedeform/chains.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace liedeform {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Element prefix_truncate(const Element& e, int k, const LieModel& m) {
  if (k == kInf) return e;
  Element out;
  for (auto& [idx, c] : e.c) {
    check(m.is_xindex(idx), "truncation of a Cartan coordinate");
    if (m.sys.first_eps_index(m.root_of(idx)) <= k) out.add(idx, c);
  }
  return out;
}

StepRecord make_unipotent_step(const Element& dir, const LieModel& m, const std::string& params) {
  StepRecord st;
  st.kind = "unipotent";
  st.params = params;
  st.direction = m.serialize(dir);
  return st;
}

StepRecord make_toric_step(std::vector<int> mvec, const std::string& params) {
  StepRecord st;
  st.kind = "toric";
  st.params = params;
  st.mvec = std::move(mvec);
  return st;
}

// executes a step against its declared target; returns pass
bool execute_step(StepRecord& st, Subspace& cur, const LieModel& m) {
  if (st.kind == "identity") {
    st.computed = cur;
  } else if (st.kind == "unipotent") {
    std::vector<std::pair<std::string, Rational>> terms;
    for (auto& [lab, val] : st.direction) terms.emplace_back(lab, rational_from_string(val));
    Element dir = m.elem(terms);
    st.computed = subspace_limit(apply_unipotent(cur, dir, m));
  } else if (st.kind == "toric") {
    st.computed = subspace_limit(apply_toric(cur, st.mvec, m));
  } else if (st.kind == "diag") {
    st.computed = subspace_limit(apply_diag_weights(cur, st.wvec, m));
  } else {
    throw std::runtime_error("unknown step kind " + st.kind);
  }
  st.equal = st.computed == st.target;
  cur = st.computed;
  return st.equal;
}

void finish(Certificate& cert, Clock::time_point t0) {
  cert.pass = !cert.steps.empty();
  for (const auto& st : cert.steps) cert.pass &= st.equal;
  cert.millis = elapsed_ms(t0);
}

}  // namespace

TypeContext make_context(LieType t, int rank) {
  TypeContext ctx;
  if (!is_classical(t)) rank = fixed_rank(t);
  ctx.m = &model_for(t, rank);
  ctx.mr = realization_for(t, rank);
  ctx.jordan = jordan_subalgebra(*ctx.m);
  ctx.k = build_K(*ctx.m, ctx.mr, ctx.jordan);
  check_kbasis(*ctx.m, ctx.k);
  ctx.ideals = enumerate_ideals(*ctx.m);
  return ctx;
}

Certificate verify_cartan_limit(const TypeContext& ctx) {
  auto t0 = Clock::now();
  const LieModel& m = *ctx.m;
  Certificate cert;
  cert.type = m.sys.type;
  cert.rank = m.sys.rank;
  cert.name = "cartan-limit";
  StepRecord st = make_unipotent_step(ctx.jordan.lambda, m, "regular nilpotent direction on the Cartan subalgebra");
  st.target = ctx.jordan.span;
  Subspace cur = Subspace::cartan(m);
  execute_step(st, cur, m);
  cert.steps.push_back(std::move(st));
  finish(cert, t0);
  return cert;
}

std::vector<Element> matrix_jordan_basis(const LieModel& m, const MatrixRealization& mr) {
  const RootSystem& sys = m.sys;
  int n = sys.rank;
  QMatrix L = mr.to_matrix(m, m.regular_nilpotent());
  std::vector<QMatrix> pw{QMatrix::identity(mr.size)};
  for (int k = 1; k <= 2 * n; ++k) pw.push_back(pw.back() * L);
  std::vector<Element> out;
  switch (sys.type) {
    case LieType::A:
      for (int k = 1; k <= n; ++k) out.push_back(mr.decompose(m, pw[k]));
      break;
    case LieType::B:
    case LieType::C:
      for (int k = 1; k <= n; ++k) out.push_back(mr.decompose(m, pw[2 * k - 1]));
      break;
    case LieType::D: {
      for (int k = 1; k <= n - 1; ++k) out.push_back(mr.decompose(m, pw[2 * k - 1]));
      QMatrix zm(2 * n, 2 * n);
      zm(0, n - 1) = 1;
      zm(n, 2 * n - 1) = -1;
      zm(0, n) = -1;
      zm(n - 1, 2 * n - 1) = 1;
      out.push_back(mr.decompose(m, zm));
      break;
    }
    default: throw std::runtime_error("matrix basis for classical types only");
  }
  return out;
}

namespace {

using Terms = std::vector<std::pair<std::string, Rational>>;

std::vector<Terms> stated_basis_terms(LieType t) {
  switch (t) {
    case LieType::G2:
      return {{{"10", rat(1)}, {"01", rat(1)}}, {{"32", rat(1)}}};
    case LieType::F4:
      return {{{"1000", rat(1)}, {"0100", rat(1)}, {"0010", rat(1)}, {"0001", rat(1)}},
              {{"0122", rat(2)}, {"1121", rat(-1)}, {"1220", rat(1)}},
              {{"1222", rat(1)}, {"1231", rat(-1)}},
              {{"2342", rat(1)}}};
    case LieType::E6:
      return {{{"10000/0", rat(1)}, {"00000/1", rat(1)}, {"01000/0", rat(1)}, {"00100/0", rat(1)},
               {"00010/0", rat(1)}, {"00001/0", rat(1)}},
              {{"01111/0", rat(1)}, {"00111/1", rat(-1)}, {"11110/0", rat(-1)}, {"11100/1", rat(1)}},
              {{"01111/1", rat(1)}, {"01210/1", rat(-1)}, {"11110/1", rat(1)}, {"11111/0", rat(-2)}},
              {{"01221/1", rat(1)}, {"11211/1", rat(-1)}, {"12210/1", rat(1)}},
              {{"11221/1", rat(1)}, {"12211/1", rat(-1)}},
              {{"12321/2", rat(1)}}};
    case LieType::E7:
      return {{{"100000/0", rat(1)}, {"000000/1", rat(1)}, {"010000/0", rat(1)}, {"001000/0", rat(1)},
               {"000100/0", rat(1)}, {"000010/0", rat(1)}, {"000001/0", rat(1)}},
              {{"012100/1", rat(1)}, {"111100/1", rat(-1)}, {"011110/1", rat(-1)}, {"111110/0", rat(2)},
               {"011111/0", rat(-2)}, {"001111/1", rat(3)}},
              {{"122100/1", rat(1)}, {"112110/1", rat(-1)}, {"012210/1", rat(1)}, {"012111/1", rat(-1)},
               {"111111/1", rat(2)}},
              {{"122111/1", rat(1)}, {"112211/1", rat(-1)}, {"012221/1", rat(1)}},
              {{"123210/2", rat(1)}, {"123211/1", rat(-1)}, {"122221/1", rat(1)}},
              {{"123221/2", rat(1)}, {"123321/1", rat(-1)}},
              {{"234321/2", rat(1)}}};
    case LieType::E8:
      return {{{"1000000/0", rat(1)}, {"0000000/1", rat(1)}, {"0100000/0", rat(1)}, {"0010000/0", rat(1)},
               {"0001000/0", rat(1)}, {"0000100/0", rat(1)}, {"0000010/0", rat(1)}, {"0000001/0", rat(1)}},
              {{"1221000/1", rat(1)}, {"1121100/1", rat(-1)}, {"0122100/1", rat(1)}, {"0121110/1", rat(-1)},
               {"1111110/1", rat(2)}, {"1111111/0", rat(-3)}, {"0111111/1", rat(1)}},
              {{"1232100/2", rat(1)}, {"1232110/1", rat(-1)}, {"1222210/1", rat(1)},
               {"1222111/1", rat(1)}, {"1122211/1", rat(-2)}, {"0122221/1", rat(2)}},
              {{"1222221/1", rat(1)}, {"1232211/1", rat(-1)}, {"1233210/1", rat(1)}, {"1232210/2", rat(-1)},
               {"1232111/2", rat(2)}},
              {{"2343210/2", rat(1)}, {"1343211/2", rat(-1)}, {"1243221/2", rat(1)}, {"1233321/2", rat(-1)}},
              {{"2343221/2", rat(1)}, {"1343321/2", rat(-1)}, {"1244321/2", rat(1)}},
              {{"2454321/2", rat(1)}, {"2354321/3", rat(-1)}},
              {{"2465432/3", rat(1)}}};
    default: return {};
  }
}

}  // namespace

std::vector<Element> stated_jordan_basis(const LieModel& m) {
  std::vector<Element> out;
  for (const Terms& t : stated_basis_terms(m.sys.type)) out.push_back(m.elem(t));
  check(!out.empty(), "no stated basis for this type");
  return out;
}

Certificate chain_type_A(const TypeContext& ctx, int ideal_index) {
  auto t0 = Clock::now();
  const LieModel& m = *ctx.m;
  const RootSystem& sys = m.sys;
  const AbelianIdeal& ideal = ctx.ideals[ideal_index];
  int n = sys.rank;
  Certificate cert;
  cert.type = sys.type;
  cert.rank = n;
  cert.ideal_index = ideal_index;
  cert.name = "ideal-" + std::to_string(ideal_index);
  cert.ideal_labels = ideal.labels;

  Partition mu = partition_of_ideal_A(ideal, sys);
  WeightSolution ws = solve_weight_system(mu);
  auto stair = partition_ideal_staircase(mu, sys);
  std::vector<Element> sgens;
  for (int r : stair) sgens.push_back(m.x(r));

  StepRecord st1;
  st1.kind = "diag";
  {
    std::string p = "w = (";
    for (size_t i = 0; i < ws.w.size(); ++i) p += (i ? "," : "") + std::to_string(ws.w[i]);
    st1.params = p + ")";
  }
  st1.wvec.assign(ws.w.begin(), ws.w.end());
  st1.target = Subspace::from_elements(sgens, m);
  Subspace cur = ctx.jordan.span;
  execute_step(st1, cur, m);
  cert.steps.push_back(std::move(st1));

  // exact permutation conjugation: reversal on the top block rows, the
  // staircase columns onto the ideal columns, remaining columns in order
  int mu1 = mu[0];
  std::vector<int> sigma(n + 2), tau(n + 2);
  for (int a = 1; a <= n + 1; ++a) sigma[a] = (a <= mu1) ? mu1 + 1 - a : a;
  {
    std::vector<int> special_cols, special_targets;
    for (size_t k = 1; k <= mu.size(); ++k) {
      int after = 0;
      for (size_t i = k; i < mu.size(); ++i) after += mu[i];
      special_cols.push_back(mu1 + after + 1);
      special_targets.push_back(n - static_cast<int>(k) + 2);
    }
    std::vector<bool> is_special(n + 2, false), used(n + 2, false);
    for (int a = 1; a <= mu1; ++a) tau[a] = a;
    for (size_t k = 0; k < special_cols.size(); ++k) {
      tau[special_cols[k]] = special_targets[k];
      is_special[special_cols[k]] = true;
      used[special_targets[k]] = true;
    }
    std::vector<int> rest_targets;
    for (int c = mu1 + 1; c <= n + 1; ++c)
      if (!used[c]) rest_targets.push_back(c);
    size_t q = 0;
    for (int c = mu1 + 1; c <= n + 1; ++c)
      if (!is_special[c]) tau[c] = rest_targets[q++];
  }
  std::vector<int> perm(sys.count(), -1);
  for (int r = 0; r < sys.count(); ++r) {
    const auto& e = sys.root(r).eps;
    int a = -1, b = -1;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 1) a = static_cast<int>(k) + 1;
      if (e[k] == -1) b = static_cast<int>(k) + 1;
    }
    int na = sigma[a], nb = tau[b];
    if (na < nb) perm[r] = sys.eps_minus(na, nb);
  }
  StepRecord st2;
  st2.kind = "permutation";
  {
    std::string p = "rows reversed on 1.." + std::to_string(mu1) + "; columns (";
    for (int c = mu1 + 1; c <= n + 1; ++c) p += std::to_string(tau[c]) + (c < n + 1 ? "," : ")");
    st2.params = p;
  }
  st2.target = ideal.span;
  st2.computed = apply_root_permutation(cur, perm, m);
  st2.equal = st2.computed == st2.target;
  cert.steps.push_back(std::move(st2));
  finish(cert, t0);
  return cert;
}

namespace {

// epsilon index pair of a plus-form root, or the (i, j) reading of the
// remaining classical forms used by the stepwise plans
std::pair<int, int> eps_pair(const RootSystem& sys, int r) {
  auto pp = sys.plus_pair(r);
  check(pp.has_value(), "plan root is not of plus form");
  return *pp;
}

bool prec_gt(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  // a comes earlier (is bigger) iff j smaller, then i smaller
  if (a.second != b.second) return a.second < b.second;
  return a.first < b.first;
}

}  // namespace

BCDPlan bcd_combinatorics(const TypeContext& ctx, const AbelianIdeal& ideal) {
  const LieModel& m = *ctx.m;
  const RootSystem& sys = m.sys;
  LieType t = sys.type;
  check(t == LieType::B || t == LieType::C || t == LieType::D, "stepwise plans are for types B, C, D");
  int n = sys.rank;
  BCDPlan plan;
  plan.order.assign(ideal.roots.begin(), ideal.roots.end());
  std::sort(plan.order.begin(), plan.order.end(),
            [&](int a, int b) { return prec_gt(eps_pair(sys, a), eps_pair(sys, b)); });
  check(plan.order[0] == sys.maximal, "the plan order must start at the highest root");
  for (int r : plan.order) plan.ij.push_back(eps_pair(sys, r));

  // leaders: minimal first index within each height
  std::map<int, int> best;  // height -> root
  for (int r : plan.order) {
    int h = sys.root(r).height;
    auto it = best.find(h);
    if (it == best.end() || eps_pair(sys, r).first < eps_pair(sys, it->second).first) best[h] = r;
  }
  for (auto& [h, r] : best) plan.leaders.insert(r);
  for (int r : plan.order)
    if (!plan.leaders.count(r)) plan.followers.insert(r);
  for (int r : plan.leaders)
    (eps_pair(sys, r).first == 1 ? plan.top_leaders : plan.inner_leaders).insert(r);

  // sources: minimal elements of the ideal in the root order
  for (int r : ideal.roots) {
    bool minimal = true;
    for (int s : ideal.roots)
      if (s != r && sys.leq(s, r)) minimal = false;
    if (minimal) plan.sources.insert(r);
  }
  {  // cross-check against the neighbor characterization
    auto bump = [&](int i, int j) -> int {
      if (i > j) std::swap(i, j);
      if (j > n) return -1;
      if (i == j) return (t == LieType::C) ? sys.eps_double(i) : -1;
      return sys.eps_plus(i, j);
    };
    for (int r : ideal.roots) {
      auto [i, j] = eps_pair(sys, r);
      int up1 = bump(i + 1, j), up2 = bump(i, j + 1);
      bool src = !(up1 >= 0 && ideal.roots.count(up1)) && !(up2 >= 0 && ideal.roots.count(up2));
      check(src == (plan.sources.count(r) > 0), "source characterization mismatch");
    }
  }
  for (int r : ideal.roots) {
    int best_src = -1;
    for (int s : plan.sources)
      if (sys.leq(s, r))
        if (best_src < 0 || prec_gt(eps_pair(sys, s), eps_pair(sys, best_src))) best_src = s;
    check(best_src >= 0, "root without a source below it");
    plan.source_of[r] = best_src;
  }
  for (int r : plan.inner_leaders)
    check(eps_pair(sys, r).second == eps_pair(sys, plan.source_of[r]).second,
          "inner leader and its source differ in the second index");
  for (int a : ideal.roots)
    for (int b : ideal.roots)
      if (eps_pair(sys, a).second == eps_pair(sys, b).second)
        check(plan.source_of[a] == plan.source_of[b], "equal second index with different sources");

  // cut sequence
  plan.cut.assign(n + 2, kInf);
  for (int l = 2; l <= n + 1; ++l) {
    int prev = plan.order[l - 2];
    bool open = false;
    if (!plan.inner_leaders.count(prev)) {
      for (int y : ideal.roots) {
        auto [i, j] = eps_pair(sys, y);
        bool form = (t == LieType::C) ? (i == j) : (i + 1 == j);
        if (form && sys.leq(y, prev)) open = true;
      }
    }
    if (open) {
      plan.cut[l] = kInf;
      continue;
    }
    int mn = kInf;
    for (int q = 0; q <= l - 2; ++q)
      mn = std::min(mn, eps_pair(sys, plan.source_of[plan.order[q]]).first);
    plan.cut[l] = mn;
  }
  for (int l = 1; l <= n; ++l) {
    check(plan.cut[l] >= plan.cut[l + 1], "cut sequence not weakly decreasing");
    if (plan.cut[l] != kInf && l >= 2)
      check(plan.cut[l] == eps_pair(sys, plan.source_of[plan.order[l - 2]]).first,
            "finite cut differs from the source index");
    if (plan.cut[l + 1] != plan.cut[l]) {
      bool ok = plan.top_leaders.count(plan.order[l - 1]) ||
                (plan.cut[l] == kInf && plan.inner_leaders.count(plan.order[l - 1]));
      check(ok, "cut change outside the allowed cases");
    }
    check(plan.cut[l] == kInf || plan.cut[l] >= eps_pair(sys, plan.order[l - 1]).first,
          "cut below the first index of the current root");
  }

  plan.min_ht = sys.root(*ideal.roots.begin()).height;
  for (int r : ideal.roots) plan.min_ht = std::min(plan.min_ht, sys.root(r).height);
  int top = sys.root(sys.maximal).height;
  int fill_count = plan.min_ht - (top - n) - 1;
  check(fill_count >= 0, "negative filler count");
  for (int kk = 1; kk <= fill_count; ++kk) {
    if (t == LieType::D && kk == 1)
      plan.fillers.push_back(*ctx.k.z);
    else
      plan.fillers.push_back(ctx.k.by_height.at(top - n + kk));
  }
  for (int r : plan.leaders)
    check(ctx.k.by_height.count(sys.root(r).height), "leader height missing from K");

  for (int l = 1; l <= n; ++l)
    if (plan.followers.count(plan.order[l - 1])) {
      plan.first_follower = l;
      break;
    }
  if (t == LieType::D) {
    // both bottom generators raise onto one line through their coefficients
    // at the extreme minus root, so the surviving combination cancels it
    const Element& lam = ctx.k.by_height.at(n - 1);
    const Element& z = *ctx.k.z;
    int rm = m.xindex(sys.eps_minus(1, n));
    plan.block_survivor = lam * z.coeff(rm) - z * lam.coeff(rm);
    check(plan.first_follower > 0, "type D plans always carry a follower");
  }
  // the height n-1 generator as the intermediates see it at stage l
  auto bottom_vec = [&](int l) -> const Element& {
    if (t == LieType::D && plan.first_follower > 0 && l > plan.first_follower)
      return *plan.block_survivor;
    return ctx.k.by_height.at(n - 1);
  };
  auto graded_vec = [&](int h, int l) -> const Element& {
    if (t == LieType::D && h == n - 1) return bottom_vec(l);
    return ctx.k.by_height.at(h);
  };

  // intermediate subspaces
  for (int l = 1; l <= n + 1; ++l) {
    std::set<int> Yl(plan.order.begin(), plan.order.begin() + (l - 1));
    std::set<int> M2l, Ll;
    for (int r : Yl) {
      if (plan.inner_leaders.count(r)) M2l.insert(r);
      if (plan.followers.count(r)) Ll.insert(r);
    }
    std::vector<Element> gens;
    for (int r : Yl) gens.push_back(m.x(r));
    auto shares_source = [&](int r) {
      for (int b : M2l)
        if (plan.source_of[b] == plan.source_of[r]) return true;
      return false;
    };
    for (int r : plan.inner_leaders)
      if (!Yl.count(r) && shares_source(r)) gens.push_back(m.x(r));
    for (int kk = static_cast<int>(Ll.size()) + 1; kk <= fill_count; ++kk) {
      const Element& base = (t == LieType::D && kk == 1) ? plan.fillers[0] : graded_vec(top - n + kk, l);
      gens.push_back(prefix_truncate(base, plan.cut[l], m));
    }
    for (int r : plan.top_leaders)
      if (!Yl.count(r))
        gens.push_back(prefix_truncate(graded_vec(sys.root(r).height, l), plan.cut[l], m));
    for (int r : plan.inner_leaders)
      if (!Yl.count(r) && !shares_source(r))
        gens.push_back(prefix_truncate(graded_vec(sys.root(r).height, l), plan.cut[l], m));
    Subspace sp = Subspace::from_elements(gens, m);
    check(sp.dimension() == n, "intermediate subspace of wrong dimension at l=" + std::to_string(l));
    // the extension property: X_alpha inside forces X_{alpha+beta} inside
    std::set<int> unit_roots = Yl;
    for (int r : plan.inner_leaders)
      if (!Yl.count(r) && shares_source(r)) unit_roots.insert(r);
    for (int a : unit_roots)
      for (int b = 0; b < sys.count(); ++b) {
        int s = sys.sum(a, b);
        if (s >= 0) check(unit_roots.count(s), "extension property fails inside an intermediate");
      }
    plan.inter.push_back(std::move(sp));
  }
  check(plan.inter.front() == ctx.k.span, "the first intermediate must be K");
  check(plan.inter.back() == ideal.span, "the last intermediate must be the ideal");
  return plan;
}

namespace {

// simple-root index sequence expressing a plus-form root, the order used
// to split off the unipotent direction in the follower case
std::vector<int> follower_sequence(LieType t, int n, int i, int j) {
  std::vector<int> seq;
  switch (t) {
    case LieType::B:
      for (int k = i; k <= n; ++k) seq.push_back(k);
      for (int k = n; k >= j; --k) seq.push_back(k);
      break;
    case LieType::C:
      for (int k = i; k <= n; ++k) seq.push_back(k);
      for (int k = n - 1; k >= j; --k) seq.push_back(k);
      break;
    case LieType::D:
      for (int k = i; k <= n - 2; ++k) seq.push_back(k);
      seq.push_back(n);
      seq.push_back(n - 1);
      for (int k = n - 2; k >= j; --k) seq.push_back(k);
      break;
    default: throw std::runtime_error("follower sequence for B, C, D");
  }
  return seq;
}

int root_from_simple_sum(const RootSystem& sys, const std::vector<int>& seq, size_t from, size_t to) {
  std::vector<int> c(sys.rank, 0);
  for (size_t q = from; q < to; ++q) c[seq[q] - 1] += 1;
  return sys.index_of(c);
}

}  // namespace

Certificate chain_BCD(const TypeContext& ctx, int ideal_index) {
  auto t0 = Clock::now();
  const LieModel& m = *ctx.m;
  const RootSystem& sys = m.sys;
  LieType t = sys.type;
  int n = sys.rank;
  const AbelianIdeal& ideal = ctx.ideals[ideal_index];
  Certificate cert;
  cert.type = t;
  cert.rank = n;
  cert.ideal_index = ideal_index;
  cert.name = "ideal-" + std::to_string(ideal_index);
  cert.ideal_labels = ideal.labels;

  BCDPlan plan = bcd_combinatorics(ctx, ideal);
  int top = sys.root(sys.maximal).height;
  int fill_count = static_cast<int>(plan.fillers.size());
  Subspace cur = ctx.k.span;
  for (int l = 1; l <= n; ++l) {
    int al = plan.order[l - 1];
    auto [il, jl] = plan.ij[l - 1];
    StepRecord st;
    if (plan.top_leaders.count(al)) {
      if (plan.cut[l + 1] == plan.cut[l]) {
        st.kind = "identity";
        st.params = "leader with unchanged cut at l=" + std::to_string(l);
      } else {
        check(plan.cut[l + 1] < plan.cut[l], "cut must shrink");
        std::vector<int> mv(n, 0);
        mv[plan.cut[l + 1] - 1] = -1;
        st = make_toric_step(std::move(mv), "inverse torus at node " + std::to_string(plan.cut[l + 1]));
      }
    } else if (plan.followers.count(al)) {
      check(plan.cut[l + 1] == plan.cut[l], "follower step with a cut change");
      int beta;
      std::string desc;
      if (t == LieType::D && l == 3) {
        if (n >= 6) {
          std::vector<int> c(n, 0);
          for (int k = 4; k <= n - 2; ++k) c[k - 1] = 1;
          c[n - 1] = 1;
          beta = sys.index_of(c);
        } else {
          check(n == 5, "special follower step needs rank at least 5");
          beta = sys.simple_index(4);
        }
        desc = "special follower direction X_" + sys.label(beta);
      } else {
        int h = top - n + static_cast<int>(std::count_if(
                              plan.order.begin(), plan.order.begin() + (l - 1),
                              [&](int r) { return plan.followers.count(r) > 0; })) +
                1;
        check(h < plan.min_ht, "follower height bookkeeping violated");
        auto seq = follower_sequence(t, n, il, jl);
        check(static_cast<int>(seq.size()) == sys.root(al).height, "expression length mismatch");
        int gamma = root_from_simple_sum(sys, seq, 0, h);
        beta = root_from_simple_sum(sys, seq, h, seq.size());
        check(gamma >= 0 && beta >= 0, "follower split is not a pair of roots");
        desc = "follower direction X_" + sys.label(beta);
      }
      st = make_unipotent_step(m.x(beta), m, desc);
    } else {  // inner leader
      check(plan.cut[l + 1] != kInf, "inner leader with an open cut");
      bool case_a = plan.cut[l] != kInf;
      if (case_a) check(plan.cut[l + 1] == plan.cut[l], "inner leader case (a) changes the cut");
      if (!case_a) check(l >= 2 && !plan.inner_leaders.count(plan.order[l - 2]), "case (b) shape violated");
      bool shared = false;
      for (int q = 0; q <= l - 2; ++q) {
        int b = plan.order[q];
        if (plan.inner_leaders.count(b) && plan.source_of[b] == plan.source_of[al]) shared = true;
      }
      if (case_a && shared) {
        st.kind = "identity";
        st.params = "inner leader already absorbed at l=" + std::to_string(l);
      } else {
        const int a = 2, b = 1;
        std::vector<int> mv(n, 0);
        mv[plan.cut[l + 1] - 1] -= a;
        mv[jl - 1] -= b;
        if (!case_a) {
          // the only torus weights that may appear in the fillers
          for (int kk = 1; kk <= fill_count; ++kk) {
            Element base = plan.fillers[kk - 1];
            if (t == LieType::D && kk > 1 && plan.block_survivor && l > plan.first_follower &&
                sys.root(m.root_of(base.c.begin()->first)).height == n - 1)
              base = *plan.block_survivor;
            Element f = prefix_truncate(base, plan.cut[l], m);
            for (auto& [idx, cc] : f.c) {
              (void)cc;
              long wgt = sys.pairing(mv, m.root_of(idx));
              bool okw = wgt == -(a + b) || wgt == 0 || ((t != LieType::C) && wgt == -b);
              check(okw, "open-question trigger: unexpected torus weight in a filler");
            }
          }
        }
        st = make_toric_step(std::move(mv), "inverse torus pair at nodes " + std::to_string(plan.cut[l + 1]) +
                                                "," + std::to_string(jl));
      }
    }
    st.target = plan.inter[l];
    bool ok = execute_step(st, cur, m);
    cert.steps.push_back(std::move(st));
    if (!ok) break;
  }
  finish(cert, t0);
  return cert;
}

Certificate chain_BCD_exceptional(const TypeContext& ctx, int ideal_index) {
  auto t0 = Clock::now();
  const LieModel& m = *ctx.m;
  const RootSystem& sys = m.sys;
  LieType t = sys.type;
  int n = sys.rank;
  const AbelianIdeal& ideal = ctx.ideals[ideal_index];
  Certificate cert;
  cert.type = t;
  cert.rank = n;
  cert.ideal_index = ideal_index;
  cert.name = "ideal-" + std::to_string(ideal_index);
  cert.ideal_labels = ideal.labels;
  IdealClass cls = classify_BCD(ideal, sys);
  Subspace cur = ctx.k.span;

  auto toric_to = [&](int node, int sign, const Subspace& target) {
    std::vector<int> mv(n, 0);
    mv[node - 1] = sign;
    StepRecord st = make_toric_step(std::move(mv), (sign < 0 ? std::string("inverse ") : std::string()) +
                                                       "torus at node " + std::to_string(node));
    st.target = target;
    return st;
  };

  std::vector<StepRecord> steps;
  if (cls == IdealClass::B_case1 || cls == IdealClass::D_case2) {
    steps.push_back(toric_to(1, -1, ideal.span));
  } else if (cls == IdealClass::D4_special) {
    std::set<int> r = ideal.roots;
    bool has_min = r.count(sys.eps_minus(1, 4)) > 0;
    bool has_plus = r.count(sys.eps_plus(1, 4)) > 0;
    int node = has_min && has_plus ? 1 : (has_min ? 3 : 4);
    steps.push_back(toric_to(node, -1, ideal.span));
  } else {
    // Case (3).  A one-parameter deformation maps both bottom generators
    // onto a single line through their shared extreme coefficient, so the
    // stated single unipotent start loses the extreme minus root for good.
    // The verified route isolates that root first with a positive torus,
    // then converts the surviving mixed generator, then separates columns.
    check(cls == IdealClass::D_case3, "unexpected exceptional class");
    const Element& lam = ctx.k.by_height.at(n - 1);
    const Element& z = *ctx.k.z;
    int rm = sys.eps_minus(1, n);
    Element u = lam * z.coeff(m.xindex(rm)) - z * lam.coeff(m.xindex(rm));
    std::vector<Element> b1{m.x(rm), u};
    for (auto& [h, e] : ctx.k.by_height)
      if (h >= n) b1.push_back(e);
    StepRecord st1 = toric_to(n, +1, Subspace::from_elements(b1, m));
    steps.push_back(std::move(st1));

    int gamma = sys.eps_minus(4, n);
    check(gamma >= 0, "case (3) conversion root missing");
    std::vector<Element> b2{m.x(rm), m.x(sys.eps_plus(1, 4))};
    for (auto& [h, e] : ctx.k.by_height)
      if (h >= n) b2.push_back(e);
    StepRecord st2 =
        make_unipotent_step(m.x(gamma), m, "case (3) conversion direction X_" + sys.label(gamma));
    st2.target = Subspace::from_elements(b2, m);
    steps.push_back(std::move(st2));

    steps.push_back(toric_to(1, -1, ideal.span));
  }
  for (auto& st : steps) {
    bool ok = execute_step(st, cur, m);
    cert.steps.push_back(std::move(st));
    if (!ok) break;
  }
  finish(cert, t0);
  return cert;
}

namespace {

struct FinishStep {
  enum Kind { toric, unipotent } kind;
  std::vector<int> mvec;       // toric
  std::string root_label;      // unipotent
  int target_kind = 0;         // 0: the ideal, 1: units one height down
                               // plus the surviving graded generators
};

// exceptional finishing data: marker root -> steps from K
struct ExceptionalFinish {
  std::string marker;
  std::vector<FinishStep> steps;
};

}  // namespace

Certificate chain_exceptional(const TypeContext& ctx, int ideal_index) {
  auto t0 = Clock::now();
  const LieModel& m = *ctx.m;
  const RootSystem& sys = m.sys;
  LieType t = sys.type;
  const AbelianIdeal& ideal = ctx.ideals[ideal_index];
  Certificate cert;
  cert.type = t;
  cert.rank = sys.rank;
  cert.ideal_index = ideal_index;
  cert.name = "ideal-" + std::to_string(ideal_index);
  cert.ideal_labels = ideal.labels;

  auto stated = stated_jordan_basis(m);
  auto unit_span_ht = [&](int hmin) {
    std::vector<Element> g;
    for (int r = 0; r < sys.count(); ++r)
      if (sys.root(r).height >= hmin) g.push_back(m.x(r));
    return g;
  };
  Element s_dir;  // the searched two-term direction, when present
  if (!ctx.k.steps.empty()) s_dir = ctx.k.steps.back().direction;

  // targets of the construction steps from J, per type
  std::vector<Subspace> mid_targets;
  auto span_of = [&](std::vector<Element> g) { return Subspace::from_elements(std::move(g), m); };
  switch (t) {
    case LieType::G2:
      mid_targets = {span_of({m.x(sys.parse_label("31")), m.x(sys.parse_label("32"))})};
      break;
    case LieType::F4: {
      auto& f = stated;  // f[0]=Lambda, f[1], f[2], f[3]
      mid_targets = {span_of({f[1], f[2], m.x(sys.parse_label("1342")), m.x(sys.parse_label("2342"))}),
                     span_of({f[2], m.x(sys.parse_label("1242")), m.x(sys.parse_label("1342")),
                              m.x(sys.parse_label("2342"))}),
                     span_of({m.x(sys.parse_label("1232")), m.x(sys.parse_label("1242")),
                              m.x(sys.parse_label("1342")), m.x(sys.parse_label("2342"))})};
      break;
    }
    case LieType::E6: {
      auto& f = stated;  // Lambda, f4, f5, f7, f8, f11
      mid_targets = {span_of({m.bracket(s_dir, f[0]), f[3], f[4], m.bracket(s_dir, f[1]),
                              m.bracket(s_dir, f[2]), f[5]})};
      break;
    }
    case LieType::E7: {
      auto& f = stated;  // Lambda, f5, f7, f9, f11, f13, f17
      mid_targets = {
          span_of({f[1], f[2], f[3], f[4], f[5], m.x(sys.parse_label("134321/2")), f[6]}),
          span_of({f[2], f[3], f[4], f[5], m.x(sys.parse_label("124321/2")),
                   m.x(sys.parse_label("134321/2")), f[6]}),
          span_of({f[3], f[4], f[5], m.x(sys.parse_label("123321/2")), m.x(sys.parse_label("124321/2")),
                   m.x(sys.parse_label("134321/2")), f[6]}),
          span_of({f[4], m.bracket(s_dir, f[3]), f[5], m.x(sys.parse_label("123321/2")),
                   m.x(sys.parse_label("124321/2")), m.x(sys.parse_label("134321/2")), f[6]})};
      break;
    }
    case LieType::E8: {
      auto& f = stated;  // Lambda, f7, f11, f13, f17, f19, f23, f29
      auto u = [&](const char* s) { return m.x(sys.parse_label(s)); };
      mid_targets = {
          span_of({f[1], f[2], f[3], f[4], f[5], f[6], u("2465431/3"), f[7]}),
          span_of({f[2], f[3], f[4], f[5], f[6], u("2465421/3"), u("2465431/3"), f[7]}),
          span_of({f[3], f[4], f[5], f[6], u("2465321/3"), u("2465421/3"), u("2465431/3"), f[7]}),
          span_of({f[4], f[5], f[6], u("2464321/3"), u("2465321/3"), u("2465421/3"), u("2465431/3"), f[7]}),
          span_of({f[5], f[6], u("2454321/3"), u("2464321/3"), u("2465321/3"), u("2465421/3"),
                   u("2465431/3"), f[7]}),
          span_of({m.bracket(s_dir, f[5]), f[6], u("2454321/3"), u("2464321/3"), u("2465321/3"),
                   u("2465421/3"), u("2465431/3"), f[7]})};
      break;
    }
    default: throw std::runtime_error("exceptional chain on a classical type");
  }
  check(mid_targets.size() == ctx.k.steps.size(), "construction script length mismatch");
  check(mid_targets.back() == ctx.k.span, "predicted K differs from the computed K");

  Subspace cur = ctx.jordan.span;
  for (size_t q = 0; q < ctx.k.steps.size(); ++q) {
    StepRecord st = make_unipotent_step(ctx.k.steps[q].direction, m, ctx.k.steps[q].desc);
    st.target = mid_targets[q];
    bool ok = execute_step(st, cur, m);
    cert.steps.push_back(std::move(st));
    if (!ok) {
      finish(cert, t0);
      return cert;
    }
  }

  // finishing steps from K, selected by a marker root of the ideal
  std::vector<ExceptionalFinish> table;
  int rank = sys.rank;
  auto mv = [&](std::initializer_list<std::pair<int, int>> nodes) {
    std::vector<int> v(rank, 0);
    for (auto& [node, val] : nodes) v[node - 1] = val;
    return v;
  };
  switch (t) {
    case LieType::G2:
      table = {{"31", {}}};
      break;
    case LieType::F4:
      table = {{"1232", {}}};
      break;
    case LieType::E6:
      table = {{"01221/1",
                {{FinishStep::unipotent, {}, "00110/0", 1}, {FinishStep::toric, mv({{1, 1}}), "", 0}}},
               {"11211/1",
                {{FinishStep::unipotent, {}, "00110/0", 1},
                 {FinishStep::toric, mv({{1, -1}, {6, -1}}), "", 0}}},
               {"12210/1",
                {{FinishStep::unipotent, {}, "00110/0", 1}, {FinishStep::toric, mv({{6, 1}}), "", 0}}}};
      break;
    case LieType::E7:
      table = {{"123210/2", {{FinishStep::toric, mv({{2, -1}}), "", 0}}},
               {"123221/1",
                {{FinishStep::unipotent, {}, "000011/0", 1}, {FinishStep::toric, mv({{2, 1}}), "", 0}}},
               {"123321/1",
                {{FinishStep::unipotent, {}, "000011/0", 1}, {FinishStep::toric, mv({{2, -1}}), "", 0}}}};
      break;
    case LieType::E8:
      table = {{"1354321/3", {{FinishStep::toric, mv({{2, -1}}), "", 0}}},
               {"2454321/2", {{FinishStep::unipotent, {}, "0100000/0", 0}}}};
      break;
    default: break;
  }
  // markers are ordered so that the first match identifies the ideal
  const ExceptionalFinish* pick = nullptr;
  for (const auto& fin : table)
    if (ideal.roots.count(sys.parse_label(fin.marker))) {
      pick = &fin;
      break;
    }
  check(pick != nullptr, "no finishing script matches the ideal");
  if (pick->steps.empty()) {
    StepRecord st;
    st.kind = "identity";
    st.params = "K is already the ideal";
    st.target = ideal.span;
    execute_step(st, cur, m);
    cert.steps.push_back(std::move(st));
  }
  for (const auto& fs : pick->steps) {
    StepRecord st;
    if (fs.kind == FinishStep::toric) {
      st = make_toric_step(fs.mvec, "finishing torus");
    } else {
      st = make_unipotent_step(m.x(sys.parse_label(fs.root_label)), m,
                               "finishing direction X_" + fs.root_label);
    }
    if (fs.target_kind == 1) {
      // intermediate in the multi-step finishes
      std::vector<Element> g;
      if (t == LieType::E7) {  // units of height >= 13 plus the 12-generator
        g = unit_span_ht(13);
        g.push_back(ctx.k.by_height.at(12));
      } else {  // E6: units of height >= 8 plus the height-7 generator
        check(t == LieType::E6, "intermediate finish target is specific to these scripts");
        g = unit_span_ht(8);
        g.push_back(ctx.k.by_height.at(7));
      }
      st.target = Subspace::from_elements(g, m);
    } else {
      st.target = ideal.span;
    }
    bool ok = execute_step(st, cur, m);
    cert.steps.push_back(std::move(st));
    if (!ok) break;
  }
  finish(cert, t0);
  return cert;
}

Certificate run_chain(const TypeContext& ctx, int ideal_index) {
  LieType t = ctx.m->sys.type;
  if (t == LieType::A) return chain_type_A(ctx, ideal_index);
  if (is_classical(t)) {
    IdealClass cls = classify_BCD(ctx.ideals[ideal_index], ctx.m->sys);
    if (cls == IdealClass::plus_only) return chain_BCD(ctx, ideal_index);
    return chain_BCD_exceptional(ctx, ideal_index);
  }
  return chain_exceptional(ctx, ideal_index);
}

}  // namespace liedeform
