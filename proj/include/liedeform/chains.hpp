#ifndef LIEDEFORM_CHAINS_HPP
#define LIEDEFORM_CHAINS_HPP

#include <limits>
#include <string>
#include <vector>

#include "liedeform/ideals.hpp"
#include "liedeform/regnil.hpp"
#include "liedeform/weights.hpp"

namespace liedeform {

constexpr int kInf = std::numeric_limits<int>::max();

struct StepRecord {
  std::string kind;  // unipotent | toric | diag | permutation | identity
  std::string params;
  std::vector<std::pair<std::string, std::string>> direction;  // unipotent element
  std::vector<int> mvec;                                       // toric exponents
  std::vector<int> wvec;                                       // diagonal exponents
  Subspace target;
  Subspace computed;
  bool equal = false;
};

struct Certificate {
  LieType type;
  int rank = 0;
  int ideal_index = -1;  // -1 for non-ideal certificates
  std::string name;      // e.g. "cartan-limit" or the ideal id
  std::vector<std::string> ideal_labels;
  std::vector<StepRecord> steps;
  bool pass = false;
  double millis = 0;
};

// Everything the chain constructions need for one (type, rank).
struct TypeContext {
  const LieModel* m = nullptr;
  const MatrixRealization* mr = nullptr;  // classical types
  JordanData jordan;
  KBasis k;
  std::vector<AbelianIdeal> ideals;
};

TypeContext make_context(LieType t, int rank);

// the limit of the unipotent family along the regular nilpotent, started
// from the Cartan subalgebra, must be the centralizer itself
Certificate verify_cartan_limit(const TypeContext& ctx);

// combinatorial plan for the stepwise degeneration in types B, C, D
struct BCDPlan {
  std::vector<int> order;                // alpha(1..n) as root indices
  std::vector<std::pair<int, int>> ij;   // epsilon index pair per ordered root
  std::set<int> leaders;                 // minimal first index per height
  std::set<int> followers;               // the rest
  std::set<int> top_leaders;             // leaders with first index 1
  std::set<int> inner_leaders;           // leaders with first index > 1
  std::set<int> sources;                 // minimal roots of the ideal
  std::map<int, int> source_of;
  std::vector<int> cut;                  // cut[l] for l = 1..n+1 (cut[0] unused)
  int min_ht = 0;
  std::vector<Element> fillers;          // K generators below the ideal heights
  int first_follower = 0;                // l with alpha(l) the first follower; 0 if none
  // type D: the bottom graded piece of K is two-dimensional (Z and the full
  // generator share the height); the first follower step maps both onto one
  // line through their common extreme coefficient, so only the combination
  // cancelling that coefficient survives.  Later intermediates carry it.
  std::optional<Element> block_survivor;
  std::vector<Subspace> inter;           // intermediate subspaces a_1..a_{n+1}
};

BCDPlan bcd_combinatorics(const TypeContext& ctx, const AbelianIdeal& ideal);

Certificate chain_type_A(const TypeContext& ctx, int ideal_index);
Certificate chain_BCD(const TypeContext& ctx, int ideal_index);
Certificate chain_BCD_exceptional(const TypeContext& ctx, int ideal_index);
Certificate chain_exceptional(const TypeContext& ctx, int ideal_index);

// dispatch to exactly one of the chain constructions
Certificate run_chain(const TypeContext& ctx, int ideal_index);

// stated generating sets from the worked exceptional sections; all lie in
// the centralizer of the regular nilpotent and span it
std::vector<Element> stated_jordan_basis(const LieModel& m);
// classical oracle: powers of the regular nilpotent matrix (plus Z for D)
std::vector<Element> matrix_jordan_basis(const LieModel& m, const MatrixRealization& mr);

}  // namespace liedeform

#endif
