#ifndef LIEDEFORM_DEFORM_HPP
#define LIEDEFORM_DEFORM_HPP

#include <optional>
#include <vector>

#include "liedeform/laurent.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

using LaurentVec = std::vector<LaurentPoly>;

// Point of the Grassmannian: reduced-echelon rational basis in the fixed
// model coordinates (H block first, then root coordinates in canonical
// order).  The reduced form is the canonical representative, so subspace
// equality is row-list equality.
struct Subspace {
  int ambient = 0;
  std::vector<QVec> basis;  // reduced row-echelon, no zero rows

  int dimension() const { return static_cast<int>(basis.size()); }
  bool contains(const QVec& v) const { return in_row_span(basis, v, ambient); }
  bool contains(const Element& e, const LieModel& m) const;
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  static Subspace from_rows(std::vector<QVec> rows, int ambient);
  static Subspace from_elements(const std::vector<Element>& gens, const LieModel& m);
  static Subspace cartan(const LieModel& m);
  std::vector<Element> elements(const LieModel& m) const;
};

QVec to_vec(const Element& e, const LieModel& m);
Element from_vec(const QVec& v, const LieModel& m);

// One-parameter family of subspaces, generators with Laurent coordinates.
// Generic rank must equal the generator count (checked at construction by
// evaluating at t = 1, retrying 2 and 3).
struct SubspaceFamily {
  int ambient = 0;
  std::vector<LaurentVec> gens;

  static SubspaceFamily make(std::vector<LaurentVec> gens, int ambient);
  std::vector<QVec> eval(const Rational& t0) const;
};

// ad(s) as a dense matrix on the model coordinates.
QMatrix ad_matrix(const Element& s, const LieModel& m);

// generators v -> sum_k t^(-k)/k! (ad X)^k v; the sum is finite.
SubspaceFamily apply_unipotent(const Subspace& s, const Element& x, const LieModel& m);
inline SubspaceFamily apply_unipotent(const Subspace& s, int beta_root, const LieModel& m) {
  return apply_unipotent(s, m.x(beta_root), m);
}

// root coordinate of alpha scaled by t^(m_vec, alpha); Cartan coordinates
// carry weight zero.
SubspaceFamily apply_toric(const Subspace& s, const std::vector<int>& m_vec, const LieModel& m);

// conjugation by diag(t^w) in a classical matrix realization: root
// coordinates scale by t^(sum_k eps_k(alpha) w_k).
SubspaceFamily apply_diag_weights(const Subspace& s, const std::vector<int>& w, const LieModel& m);

// exact relabeling of root coordinates under a permutation conjugation;
// perm maps root index -> root index and must be defined on the support.
Subspace apply_root_permutation(const Subspace& s, const std::vector<int>& perm, const LieModel& m);

// The limit of the family at t -> 0 in the Grassmannian: normalize
// generators to valuation zero, evaluate at zero, and eliminate rational
// dependencies by replacing the highest-index dependent generator with the
// dependency combination until the evaluations have full rank.
Subspace subspace_limit(const SubspaceFamily& f);

// Laurent-linear extension of ad for property tests.
LaurentVec ad_apply(const QMatrix& admat, const LaurentVec& v);
LaurentVec bracket_laurent(const LaurentVec& a, const LaurentVec& b, const LieModel& m);

}  // namespace liedeform

#endif
