#ifndef LIEDEFORM_LIEALG_HPP
#define LIEDEFORM_LIEALG_HPP

#include <map>
#include <string>
#include <vector>

#include "liedeform/linalg.hpp"
#include "liedeform/roots.hpp"

namespace liedeform {

// Sparse element of the Borel subalgebra b = h + n.  Basis indices:
// 0..rank-1 are H_1..H_rank, rank + r is X over positive root r.
struct Element {
  std::map<int, Rational> c;

  bool is_zero() const { return c.empty(); }
  Rational coeff(int k) const {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
  }
  void add(int k, const Rational& v) {
    if (v == 0) return;
    auto [it, fresh] = c.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) c.erase(it);
    }
  }
  Element& operator+=(const Element& o) {
    for (auto& [k, v] : o.c) add(k, v);
    return *this;
  }
  Element operator*(const Rational& s) const {
    Element r;
    if (s == 0) return r;
    for (auto& [k, v] : c) r.c[k] = v * s;
    return r;
  }
  Element operator-() const { return *this * Rational(-1); }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a += -b; }
  bool operator==(const Element& o) const { return c == o.c; }
};

// Bracket table for the Borel subalgebra: structure constants on positive
// pairs plus the Cartan weights.  Normalized so that for every simple
// alpha_i and non-simple positive beta with beta + alpha_i a root,
// [X_i, X_beta] = (p+1) X_{beta+alpha_i} with p the alpha_i-string length
// below beta.
struct LieModel {
  RootSystem sys;
  std::vector<std::vector<Rational>> nmat;  // [a][b] with [X_a, X_b] = N X_{a+b}

  int dim() const { return sys.rank + sys.count(); }
  int hindex(int i) const { return i; }
  int xindex(int r) const { return sys.rank + r; }
  bool is_xindex(int k) const { return k >= sys.rank; }
  int root_of(int k) const { return k - sys.rank; }
  std::string basis_label(int k) const;
  int parse_basis_label(const std::string& s) const;

  Element x(int r) const {
    Element e;
    e.c[xindex(r)] = 1;
    return e;
  }
  Element regular_nilpotent() const;  // sum of simple root vectors
  Element bracket(const Element& a, const Element& b) const;

  // element from (basis label, coefficient) pairs
  Element elem(const std::vector<std::pair<std::string, Rational>>& terms) const;
  std::vector<std::pair<std::string, std::string>> serialize(const Element& e) const;
};

// Matrix realization of the classical types (tracks the bracket model:
// root matrices carry the same normalization as the N table).
struct MatrixRealization {
  int size = 0;
  QMatrix form;                   // X^t F + F X = 0 for B, C, D; unused for A
  std::vector<QMatrix> root_mat;  // per positive root
  std::vector<QMatrix> h_mat;     // per simple index

  QMatrix to_matrix(const LieModel& m, const Element& e) const;
  Element decompose(const LieModel& m, const QMatrix& mat) const;  // mat in b
};

std::pair<LieModel, MatrixRealization> classical_model(LieType t, int rank);
LieModel exceptional_model(LieType t);
// either of the above, by type
const LieModel& model_for(LieType t, int rank);
const MatrixRealization* realization_for(LieType t, int rank);

// diagnostics used by tests and the acceptance suite
bool jacobi_holds(const LieModel& m);
bool antisymmetry_holds(const LieModel& m);
// [X_i, X_beta] = (p+1) X_{beta+alpha_i} on all (simple, non-simple) pairs
bool simple_bracket_normalization_holds(const LieModel& m);

}  // namespace liedeform

#endif
