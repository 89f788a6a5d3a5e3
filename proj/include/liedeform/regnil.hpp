#ifndef LIEDEFORM_REGNIL_HPP
#define LIEDEFORM_REGNIL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liedeform/deform.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

// exponents of the type, with multiplicity
std::multiset<int> exponents_of(LieType t, int rank);

// Centralizer data of the regular nilpotent Lambda = sum of simple root
// vectors.  The centralizer is computed inside the nilradical: an element
// h + x of b commuting with Lambda has h = 0 because the height-1 part of
// the bracket is -sum alpha_i(h) X_i and the simple roots are independent;
// dim = rank then certifies the kernel is the full centralizer.
struct JordanData {
  Element lambda;
  Subspace span;                 // inside the model coordinates
  std::vector<Element> basis;    // reduced basis, height-graded
  std::multiset<int> heights;
  std::optional<Element> z;      // type D only
};

JordanData jordan_subalgebra(const LieModel& m);

// The deformation direction of the appendix constructions (types B, C, D
// with the fixed example coefficients); the zero element for type A.
Element build_S(const LieModel& m, const MatrixRealization& mr);

struct KStep {
  Element direction;  // unipotent exp(t^-1 ad direction)
  std::string desc;
};

// Abelian degeneration of J with height-graded generators covering the top
// n heights (top n-1 plus Z for type D).
struct KBasis {
  std::map<int, Element> by_height;
  std::optional<Element> z;  // type D
  Subspace span;
  std::vector<KStep> steps;  // construction steps applied to J
  int min_height = 0, max_height = 0;

  std::vector<Element> generators() const;
};

KBasis build_K(const LieModel& m, const MatrixRealization* mr, const JordanData& jd);

// Invariant checks (throws with a description on failure).
void check_kbasis(const LieModel& m, const KBasis& k);

// Appendix-predicted generator shapes for B, C, D, computed from the
// matrix realization; used as an independent oracle for build_K.
std::vector<Element> predicted_K_classical(const LieModel& m, const MatrixRealization& mr);

}  // namespace liedeform

#endif
