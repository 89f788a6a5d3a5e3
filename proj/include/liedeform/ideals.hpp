#ifndef LIEDEFORM_IDEALS_HPP
#define LIEDEFORM_IDEALS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liedeform/deform.hpp"
#include "liedeform/liealg.hpp"

namespace liedeform {

// n-dimensional abelian ideal of the Borel subalgebra: an upward-closed
// set of positive roots of size n with no two members summing to a root.
struct AbelianIdeal {
  std::set<int> roots;
  Subspace span;
  std::vector<std::string> labels;  // sorted root labels
};

enum class IdealClass { plus_only, B_case1, D_case2, D_case3, D4_special };
std::string ideal_class_name(IdealClass c);

std::vector<AbelianIdeal> enumerate_ideals(const LieModel& m);

// types B, C, D: which chain construction the ideal belongs to
IdealClass classify_BCD(const AbelianIdeal& ideal, const RootSystem& sys);

// weakly decreasing partition <-> type A ideal
using Partition = std::vector<int>;

Partition partition_of_ideal_A(const AbelianIdeal& ideal, const RootSystem& sys);
std::set<int> partition_ideal(const Partition& mu, const RootSystem& sys);
// the companion shape inside the top block, reached by the diagonal limit
std::set<int> partition_ideal_staircase(const Partition& mu, const RootSystem& sys);
std::vector<Partition> partitions_of(int n);

// true iff adding any simple root to a member either leaves the root
// system or stays inside the set; this is the exact condition for the
// top wedge of the root vectors to be annihilated by every raising
// derivation (repeated wedge factors vanish, replacements off the set are
// independent monomials).
bool highest_weight_check(const std::set<int>& roots, const LieModel& m);

}  // namespace liedeform

#endif
