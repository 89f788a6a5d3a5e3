#include "liedeform/weights.hpp"

#include <algorithm>
#include <numeric>

namespace liedeform {

namespace {

int psum_after(const Partition& mu, size_t k) {  // sum of mu_i for i > k (1-based k)
  int s = 0;
  for (size_t i = k; i < mu.size(); ++i) s += mu[i];
  return s;
}

Rational window(const std::vector<Rational>& z, int j, int h) {  // z_j + ... + z_{j+h-1}
  Rational s(0);
  for (int i = j; i < j + h; ++i) s += z[i - 1];
  return s;
}

std::vector<Rational> solve_rational(const Partition& mu);

std::vector<Rational> case1(const Partition& mu) {
  Partition sub = mu;
  sub[0] -= 1;
  if (sub[0] == 0) sub.erase(sub.begin());
  std::vector<Rational> zp = solve_rational(sub);
  Rational total(0);
  for (auto& v : zp) total += v;
  std::vector<Rational> z{total};
  z.insert(z.end(), zp.begin(), zp.end());
  return z;
}

std::vector<Rational> case23(const Partition& mu) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  int m = mu[0];
  Partition sub(mu.begin() + 1, mu.end());
  std::vector<Rational> zt = solve_rational(sub);
  Rational total(0);
  for (auto& v : zt) total += v;
  std::vector<Rational> z(n);
  for (int i = 1; i <= n - m; ++i) z[i - 1] = zt[i - 1];
  z[n - m] = total;  // position n+1-m
  for (int i = n + 2 - m; i <= n; ++i) z[i - 1] = zt[i - m - 1];
  if (n + 1 < 3 * m) {
    // minimal slack over the subsystem's strict inequalities
    int nn = n - m;
    Rational gap;
    bool first = true;
    for (int h = 1; h <= nn; ++h) {
      int ih = staircase_row(sub, h);
      for (int j = 1; j <= nn + 1 - h; ++j) {
        if (j == ih) continue;
        Rational g = window(zt, j, h) - window(zt, ih, h);
        if (first || g < gap) {
          gap = g;
          first = false;
        }
      }
    }
    check(!first && gap > 0, "empty slack in the subsystem");
    z[2 * m - 1] = gap / 2;  // position 2m
  }
  return z;
}

std::vector<Rational> solve_rational(const Partition& mu) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  check(!mu.empty() && n >= 1, "empty partition");
  for (size_t i = 0; i + 1 < mu.size(); ++i) check(mu[i] >= mu[i + 1], "partition not weakly decreasing");
  if (mu.size() == 1) {  // (1, ..., 1, 0)
    std::vector<Rational> z(n, Rational(1));
    z[n - 1] = 0;
    return z;
  }
  if (mu.size() == 2 && mu[0] == mu[1]) {  // half-and-half table
    std::vector<Rational> z(n, Rational(2));
    z[n / 2 - 1] = 0;
    if (n == 2) {
      z[1] = 1;
      return z;
    }
    z[n / 2] = 3;
    z[n - 1] = 1;
    return z;
  }
  if (mu.size() == 2 && mu[0] == 2 && mu[1] == 1) {
    // the generic descent degenerates here (the recursive seed forces the
    // two windows of width two to tie); this solution is verified directly
    return {Rational(2), Rational(0), Rational(1)};
  }
  if (mu[1] < mu[0]) return case1(mu);
  return case23(mu);
}

}  // namespace

int staircase_row(const Partition& mu, int h) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  check(h >= 1 && h <= n, "difference out of range");
  for (size_t k = 1; k <= mu.size(); ++k) {
    int after = psum_after(mu, k);
    int upto = after + mu[k - 1];
    if (after < h && h <= upto) return mu[0] + 1 - (h - after);
  }
  throw std::runtime_error("no staircase cell at the given difference");
}

std::optional<std::pair<int, int>> weight_system_violation(const Partition& mu,
                                                           const std::vector<Rational>& z) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  if (static_cast<int>(z.size()) != n) return std::make_pair(0, 0);
  for (int i = 1; i <= n; ++i) {
    if (i == mu[0] && z[i - 1] != 0) return std::make_pair(0, i);
    if (i != mu[0] && !(z[i - 1] > 0)) return std::make_pair(0, i);
  }
  for (int h = 1; h <= n; ++h) {
    int ih = staircase_row(mu, h);
    for (int j = 1; j <= n + 1 - h; ++j) {
      if (j == ih) continue;
      if (!(window(z, ih, h) < window(z, j, h))) return std::make_pair(h, j);
    }
  }
  return std::nullopt;
}

WeightSolution solve_weight_system(const Partition& mu) {
  int n = std::accumulate(mu.begin(), mu.end(), 0);
  std::vector<Rational> zr = solve_rational(mu);
  // clear denominators, then scale into (n+1)Z
  mpz_class den(1);
  for (auto& v : zr) {
    mpz_class d = v.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  std::vector<Rational> zi;
  for (auto& v : zr) zi.push_back(v * Rational(den) * Rational(n + 1));
  auto bad = weight_system_violation(mu, zi);
  if (bad)
    throw std::runtime_error("weight system violated at (h=" + std::to_string(bad->first) +
                             ", j=" + std::to_string(bad->second) + ")");
  WeightSolution sol;
  sol.mu = mu;
  for (auto& v : zi) {
    check(v.get_den() == 1, "non-integral scaled solution");
    check(v.get_num() % (n + 1) == 0, "solution not divisible by n+1");
    sol.z.push_back(static_cast<long>(v.get_num().get_si()));
  }
  sol.w.assign(n + 1, 0);
  for (int j = 1; j <= n + 1; ++j) {
    long acc = 0;
    for (int k = j; k <= n; ++k) acc += (n + 1 - k) * sol.z[k - 1];
    for (int k = 1; k <= j - 1; ++k) acc -= k * sol.z[k - 1];
    check(acc % (n + 1) == 0, "diagonal exponent not integral");
    sol.w[j - 1] = acc / (n + 1);
  }
  long wsum = std::accumulate(sol.w.begin(), sol.w.end(), 0L);
  check(wsum == 0, "diagonal exponents do not balance");
  for (int j = 1; j <= n + 1; ++j)
    for (int h = 1; j + h <= n + 1; ++h) {
      long diff = sol.w[j - 1] - sol.w[j + h - 1];
      long zsum = 0;
      for (int k = j; k <= j + h - 1; ++k) zsum += sol.z[k - 1];
      check(diff == zsum, "difference identity failed");
    }
  return sol;
}

}  // namespace liedeform
