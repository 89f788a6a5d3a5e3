#include "liedeform/ideals.hpp"

#include <algorithm>
#include <functional>

namespace liedeform {

std::string ideal_class_name(IdealClass c) {
  switch (c) {
    case IdealClass::plus_only: return "plus_only";
    case IdealClass::B_case1: return "B_case1";
    case IdealClass::D_case2: return "D_case2";
    case IdealClass::D_case3: return "D_case3";
    case IdealClass::D4_special: return "D4_special";
  }
  return "?";
}

namespace {

void dfs(const RootSystem& sys, const std::vector<int>& cand, size_t pos, std::set<int>& cur,
         std::vector<std::set<int>>& out, int n) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  if (pos == cand.size()) return;
  if (cur.size() + (cand.size() - pos) < static_cast<size_t>(n)) return;
  int r = cand[pos];
  // include r if legal: closure upward (higher roots already decided) and
  // pairwise sums leave the root system
  bool ok = true;
  for (int i = 0; i < sys.rank && ok; ++i) {
    int up = sys.sum(r, sys.simple_index(i));
    if (up >= 0 && !cur.count(up)) ok = false;
  }
  for (int s : cur)
    if (!ok || sys.sum(r, s) >= 0) {
      ok = false;
      break;
    }
  if (ok && sys.sum(r, r) >= 0) ok = false;
  if (ok) {
    cur.insert(r);
    dfs(sys, cand, pos + 1, cur, out, n);
    cur.erase(r);
  }
  dfs(sys, cand, pos + 1, cur, out, n);
}

}  // namespace

std::vector<AbelianIdeal> enumerate_ideals(const LieModel& m) {
  const RootSystem& sys = m.sys;
  int n = sys.rank;
  int bound = sys.root(sys.maximal).height - n + 1;
  std::vector<int> cand;
  for (int r = sys.count() - 1; r >= 0; --r)
    if (sys.root(r).height >= bound) cand.push_back(r);  // decreasing canonical order
  std::vector<std::set<int>> sets;
  std::set<int> cur;
  dfs(sys, cand, 0, cur, sets, n);
  // deterministic order on the sorted root lists
  std::vector<std::vector<int>> keys;
  for (const auto& s : sets) keys.emplace_back(s.begin(), s.end());
  std::vector<size_t> order(sets.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return keys[a] < keys[b]; });
  std::vector<AbelianIdeal> out;
  for (size_t i : order) {
    AbelianIdeal id;
    id.roots = sets[i];
    check(upward_closure_test(id.roots, sys), "enumerated set not upward closed");
    for (int a : id.roots) {
      check(sys.root(a).height >= bound, "ideal root below the height window");
      for (int b : id.roots) check(sys.sum(a, b) < 0, "enumerated set not abelian");
    }
    std::vector<Element> gens;
    for (int r : id.roots) gens.push_back(m.x(r));
    id.span = Subspace::from_elements(gens, m);
    for (int r : id.roots) id.labels.push_back(sys.label(r));
    out.push_back(std::move(id));
  }
  return out;
}

IdealClass classify_BCD(const AbelianIdeal& ideal, const RootSystem& sys) {
  check(sys.type == LieType::B || sys.type == LieType::C || sys.type == LieType::D,
        "classification applies to types B, C, D");
  int n = sys.rank;
  if (sys.type == LieType::D && n == 4) return IdealClass::D4_special;
  bool all_plus = true;
  for (int r : ideal.roots) all_plus &= sys.plus_pair(r).has_value();
  if (all_plus) return IdealClass::plus_only;
  if (sys.type == LieType::B) {
    std::set<int> expect{sys.eps_single(1)};
    for (int j = 2; j <= n; ++j) expect.insert(sys.eps_plus(1, j));
    check(ideal.roots == expect, "unclassifiable ideal in type B");
    return IdealClass::B_case1;
  }
  // type D
  std::set<int> case2{sys.eps_minus(1, n)};
  for (int j = 2; j <= n; ++j) case2.insert(sys.eps_plus(1, j));
  if (ideal.roots == case2) return IdealClass::D_case2;
  std::set<int> case3{sys.eps_plus(2, 3), sys.eps_minus(1, n)};
  for (int j = 2; j < n; ++j) case3.insert(sys.eps_plus(1, j));
  check(ideal.roots == case3, "unclassifiable ideal in type D");
  return IdealClass::D_case3;
}

Partition partition_of_ideal_A(const AbelianIdeal& ideal, const RootSystem& sys) {
  check(sys.type == LieType::A, "partition shape applies to type A");
  int n = sys.rank;
  std::map<int, std::vector<int>> by_col;  // column -> rows
  for (int r : ideal.roots) {
    const auto& e = sys.root(r).eps;
    int i = -1, j = -1;
    for (size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 1) i = static_cast<int>(k) + 1;
      if (e[k] == -1) j = static_cast<int>(k) + 1;
    }
    by_col[j].push_back(i);
  }
  Partition mu;
  int k = 1;
  for (auto it = by_col.rbegin(); it != by_col.rend(); ++it, ++k) {
    check(it->first == n - k + 2, "ideal is not of partition shape");
    std::sort(it->second.begin(), it->second.end());
    int mk = static_cast<int>(it->second.size());
    for (int q = 0; q < mk; ++q) check(it->second[q] == q + 1, "ideal rows are not an initial segment");
    mu.push_back(mk);
  }
  for (size_t i = 0; i + 1 < mu.size(); ++i) check(mu[i] >= mu[i + 1], "column sizes not weakly decreasing");
  int total = 0;
  for (int v : mu) total += v;
  check(total == n, "partition size mismatch");
  check(partition_ideal(mu, sys) == ideal.roots, "partition round trip failed");
  return mu;
}

std::set<int> partition_ideal(const Partition& mu, const RootSystem& sys) {
  int n = sys.rank;
  std::set<int> roots;
  for (size_t k = 1; k <= mu.size(); ++k)
    for (int j = 1; j <= mu[k - 1]; ++j) {
      int col = n - static_cast<int>(k) + 2;
      int idx = sys.eps_minus(j, col);
      check(idx >= 0, "partition cell outside the root system");
      roots.insert(idx);
    }
  return roots;
}

std::set<int> partition_ideal_staircase(const Partition& mu, const RootSystem& sys) {
  std::set<int> roots;
  int mu1 = mu.empty() ? 0 : mu[0];
  int tail = 0;
  for (size_t i = 1; i < mu.size(); ++i) tail += mu[i];
  for (size_t k = 1; k <= mu.size(); ++k) {
    int after = 0;
    for (size_t i = k; i < mu.size(); ++i) after += mu[i];
    int col = mu1 + after + 1;
    for (int j = 1; j <= mu[k - 1]; ++j) {
      int idx = sys.eps_minus(mu1 + 1 - j, col);
      check(idx >= 0, "staircase cell outside the root system");
      roots.insert(idx);
    }
  }
  (void)tail;
  return roots;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // lexicographically decreasing generation
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

bool highest_weight_check(const std::set<int>& roots, const LieModel& m) {
  const RootSystem& sys = m.sys;
  for (int b : roots)
    for (int i = 0; i < sys.rank; ++i) {
      int s = sys.sum(b, sys.simple_index(i));
      if (s >= 0 && !roots.count(s)) return false;
    }
  return true;
}

}  // namespace liedeform
