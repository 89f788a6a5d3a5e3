#include "liedeform/roots.hpp"

#include <algorithm>
#include <sstream>

namespace liedeform {

std::string type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::G2: return "G2";
    case LieType::F4: return "F4";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
  }
  return "?";
}

std::optional<LieType> type_from_name(const std::string& s) {
  if (s == "A") return LieType::A;
  if (s == "B") return LieType::B;
  if (s == "C") return LieType::C;
  if (s == "D") return LieType::D;
  if (s == "G2") return LieType::G2;
  if (s == "F4") return LieType::F4;
  if (s == "E6") return LieType::E6;
  if (s == "E7") return LieType::E7;
  if (s == "E8") return LieType::E8;
  return std::nullopt;
}

bool is_classical(LieType t) {
  return t == LieType::A || t == LieType::B || t == LieType::C || t == LieType::D;
}

int fixed_rank(LieType t) {
  switch (t) {
    case LieType::G2: return 2;
    case LieType::F4: return 4;
    case LieType::E6: return 6;
    case LieType::E7: return 7;
    case LieType::E8: return 8;
    default: return 0;
  }
}

namespace {

// cartan[i][j] = <alpha_j, alpha_i^v>, Bourbaki numbering
std::vector<std::vector<int>> cartan_matrix(LieType t, int n) {
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };  // 0-based
  switch (t) {
    case LieType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case LieType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^v>
      break;
    case LieType::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // <alpha_n, alpha_{n-1}^v>
      break;
    case LieType::D:
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case LieType::G2:
      c[0][1] = -3;  // <alpha_2, alpha_1^v>, alpha_1 short
      c[1][0] = -1;
      break;
    case LieType::F4:
      link(0, 1);
      link(2, 3);
      c[1][2] = -1;  // <alpha_3, alpha_2^v>
      c[2][1] = -2;  // <alpha_2, alpha_3^v>
      break;
    case LieType::E6:
    case LieType::E7:
    case LieType::E8:
      link(0, 2);
      link(2, 3);
      link(1, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
  }
  return c;
}

std::vector<std::vector<int>> simple_eps(LieType t, int n) {
  // epsilon coordinates of the simple roots, classical types
  std::vector<std::vector<int>> e;
  int dim = (t == LieType::A) ? n + 1 : n;
  for (int i = 0; i < n; ++i) e.emplace_back(dim, 0);
  for (int i = 0; i + 1 < n; ++i) {
    e[i][i] = 1;
    e[i][i + 1] = -1;
  }
  switch (t) {
    case LieType::A:
      e[n - 1][n - 1] = 1;
      e[n - 1][n] = -1;
      break;
    case LieType::B:
      e[n - 1][n - 1] = 1;
      break;
    case LieType::C:
      e[n - 1][n - 1] = 2;
      break;
    case LieType::D:
      e[n - 1][n - 2] = 1;
      e[n - 1][n - 1] = 1;
      break;
    default:
      break;
  }
  return e;
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  if (is_classical(type)) {
    int lo = (type == LieType::A) ? 1 : (type == LieType::D ? 4 : 2);
    check(rank >= lo, "rank too small for type " + type_name(type));
  } else {
    if (rank == 0) rank = fixed_rank(type);
    check(rank == fixed_rank(type), "fixed rank for type " + type_name(type));
  }
  RootSystem sys;
  sys.type = type;
  sys.rank = rank;
  sys.cartan = cartan_matrix(type, rank);

  // closure generation by height
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> roots;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    seen[c] = static_cast<int>(roots.size());
    roots.push_back(c);
  }
  size_t head = 0;
  while (head < roots.size()) {
    std::vector<int> beta = roots[head++];
    for (int i = 0; i < rank; ++i) {
      // p = string length below beta, q = p - <beta, alpha_i^v>
      int p = 0;
      std::vector<int> down = beta;
      for (;;) {
        down[i] -= 1;
        bool nonneg = true;
        for (int v : down) nonneg &= v >= 0;
        if (!nonneg || !seen.count(down)) break;
        ++p;
      }
      long pair = 0;
      for (int j = 0; j < rank; ++j) pair += static_cast<long>(beta[j]) * sys.cartan[i][j];
      if (p - pair >= 1) {
        std::vector<int> up = beta;
        up[i] += 1;
        if (!seen.count(up)) {
          seen[up] = static_cast<int>(roots.size());
          roots.push_back(up);
        }
      }
    }
  }

  // canonical order: (height, lex coords)
  auto height_of = [](const std::vector<int>& c) {
    int h = 0;
    for (int v : c) h += v;
    return h;
  };
  std::sort(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  auto eps_simple = is_classical(type) ? simple_eps(type, rank) : std::vector<std::vector<int>>();
  for (const auto& c : roots) {
    Root r;
    r.coords = c;
    r.height = height_of(c);
    if (is_classical(type)) {
      int dim = (type == LieType::A) ? rank + 1 : rank;
      r.eps.assign(dim, 0);
      for (int j = 0; j < rank; ++j)
        for (int k = 0; k < dim; ++k) r.eps[k] += c[j] * eps_simple[j][k];
    }
    sys.positive.push_back(std::move(r));
  }
  for (int i = 0; i < sys.count(); ++i) sys.index_[sys.positive[i].coords] = i;
  sys.simple_.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    sys.simple_[i] = sys.index_.at(c);
  }
  sys.sum_.assign(sys.count(), std::vector<int>(sys.count(), -1));
  for (int a = 0; a < sys.count(); ++a)
    for (int b = 0; b < sys.count(); ++b) {
      std::vector<int> s = sys.positive[a].coords;
      for (int j = 0; j < rank; ++j) s[j] += sys.positive[b].coords[j];
      auto it = sys.index_.find(s);
      if (it != sys.index_.end()) sys.sum_[a][b] = it->second;
    }
  sys.maximal = sys.count() - 1;
  for (int a = 0; a < sys.count(); ++a) check(sys.leq(a, sys.maximal), "highest root not maximal");
  return sys;
}

int RootSystem::index_of(const std::vector<int>& coords) const {
  auto it = index_.find(coords);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::leq(int a, int b) const {
  for (int j = 0; j < rank; ++j)
    if (positive[a].coords[j] > positive[b].coords[j]) return false;
  return true;
}

int RootSystem::weight(int i, int a) const {
  long w = 0;
  for (int j = 0; j < rank; ++j) w += static_cast<long>(positive[a].coords[j]) * cartan[i][j];
  return static_cast<int>(w);
}

long RootSystem::pairing(const std::vector<int>& m, int a) const {
  check(static_cast<int>(m.size()) == rank, "pairing vector length");
  long s = 0;
  for (int j = 0; j < rank; ++j) s += static_cast<long>(m[j]) * positive[a].coords[j];
  return s;
}

int RootSystem::string_down(int i, int beta) const {
  int p = 0;
  std::vector<int> c = positive[beta].coords;
  for (;;) {
    c[i] -= 1;
    if (index_of(c) < 0) break;
    ++p;
  }
  return p;
}

int RootSystem::first_eps_index(int a) const {
  check(is_classical(type), "epsilon form on classical types only");
  const auto& e = positive[a].eps;
  for (size_t k = 0; k < e.size(); ++k)
    if (e[k] != 0) return static_cast<int>(k) + 1;
  throw std::runtime_error("zero epsilon vector");
}

std::optional<std::pair<int, int>> RootSystem::plus_pair(int a) const {
  check(is_classical(type), "epsilon form on classical types only");
  const auto& e = positive[a].eps;
  std::vector<int> idx;
  for (size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 2 && type == LieType::C) return std::make_pair(static_cast<int>(k) + 1, static_cast<int>(k) + 1);
    if (e[k] == 1)
      idx.push_back(static_cast<int>(k) + 1);
    else if (e[k] != 0)
      return std::nullopt;
  }
  if (idx.size() == 2) return std::make_pair(idx[0], idx[1]);
  return std::nullopt;
}

int RootSystem::find_eps(const std::vector<int>& eps) const {
  for (int a = 0; a < count(); ++a)
    if (positive[a].eps == eps) return a;
  return -1;
}

int RootSystem::eps_minus(int i, int j) const {
  int dim = (type == LieType::A) ? rank + 1 : rank;
  std::vector<int> e(dim, 0);
  e[i - 1] = 1;
  e[j - 1] = -1;
  return find_eps(e);
}

int RootSystem::eps_plus(int i, int j) const {
  int dim = (type == LieType::A) ? rank + 1 : rank;
  std::vector<int> e(dim, 0);
  e[i - 1] += 1;
  e[j - 1] += 1;
  return find_eps(e);
}

int RootSystem::eps_single(int i) const {
  std::vector<int> e(rank, 0);
  e[i - 1] = 1;
  return find_eps(e);
}

int RootSystem::eps_double(int i) const {
  std::vector<int> e(rank, 0);
  e[i - 1] = 2;
  return find_eps(e);
}

std::string RootSystem::label(int a) const {
  const Root& r = positive[a];
  std::ostringstream os;
  if (is_classical(type)) {
    auto pp = plus_pair(a);
    if (pp && pp->first == pp->second) {
      os << "2e" << pp->first;
    } else if (pp) {
      os << "e" << pp->first << "+e" << pp->second;
    } else {
      int i = -1, j = -1, single = -1;
      for (size_t k = 0; k < r.eps.size(); ++k) {
        if (r.eps[k] == 1 && i < 0)
          i = static_cast<int>(k) + 1;
        else if (r.eps[k] == 1)
          single = static_cast<int>(k) + 1;
        else if (r.eps[k] == -1)
          j = static_cast<int>(k) + 1;
      }
      (void)single;
      if (j >= 0)
        os << "e" << i << "-e" << j;
      else
        os << "e" << i;
    }
    return os.str();
  }
  if (type == LieType::G2 || type == LieType::F4) {
    for (int v : r.coords) os << v;
    return os.str();
  }
  // E types: top row alpha_1 alpha_3 alpha_4 ... then alpha_2 after a slash
  os << r.coords[0];
  for (int j = 2; j < rank; ++j) os << r.coords[j];
  os << "/" << r.coords[1];
  return os.str();
}

int RootSystem::parse_label(const std::string& s) const {
  if (is_classical(type)) {
    int dim = (type == LieType::A) ? rank + 1 : rank;
    std::vector<int> e(dim, 0);
    size_t pos = 0;
    int sign = 1;
    bool two = false;
    while (pos < s.size()) {
      if (s[pos] == '+') {
        sign = 1;
        ++pos;
        continue;
      }
      if (s[pos] == '-') {
        sign = -1;
        ++pos;
        continue;
      }
      if (s[pos] == '2') {
        two = true;
        ++pos;
        continue;
      }
      check(s[pos] == 'e', "bad classical root label: " + s);
      ++pos;
      size_t q = pos;
      while (q < s.size() && isdigit(s[q])) ++q;
      int i = std::stoi(s.substr(pos, q - pos));
      check(i >= 1 && i <= dim, "epsilon index out of range: " + s);
      e[i - 1] += sign * (two ? 2 : 1);
      two = false;
      pos = q;
    }
    int a = find_eps(e);
    check(a >= 0, "not a positive root: " + s);
    return a;
  }
  std::vector<int> c(rank, 0);
  if (type == LieType::G2 || type == LieType::F4) {
    check(static_cast<int>(s.size()) == rank, "bad label: " + s);
    for (int j = 0; j < rank; ++j) c[j] = s[j] - '0';
  } else {
    check(static_cast<int>(s.size()) == rank + 1 && s[rank - 1] == '/', "bad label: " + s);
    c[0] = s[0] - '0';
    for (int j = 2; j < rank; ++j) c[j] = s[j - 1] - '0';
    c[1] = s[rank] - '0';
  }
  int a = index_of(c);
  check(a >= 0, "not a positive root: " + s);
  return a;
}

bool upward_closure_test(const std::set<int>& s, const RootSystem& sys) {
  for (int a : s)
    for (int b = 0; b < sys.count(); ++b) {
      int ab = sys.sum(a, b);
      if (ab >= 0 && !s.count(ab)) return false;
    }
  return true;
}

}  // namespace liedeform
