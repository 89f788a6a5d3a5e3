#ifndef LIEDEFORM_ROOTS_HPP
#define LIEDEFORM_ROOTS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "liedeform/rational.hpp"

namespace liedeform {

enum class LieType { A, B, C, D, G2, F4, E6, E7, E8 };

std::string type_name(LieType t);
std::optional<LieType> type_from_name(const std::string& s);
bool is_classical(LieType t);
int fixed_rank(LieType t);  // exceptional types; 0 for classical

struct Root {
  std::vector<int> coords;  // coefficients over simple roots, Bourbaki order
  int height = 0;
  std::vector<int> eps;     // epsilon coordinates, classical types only
};

// Positive root system in the Bourbaki simple-root labeling, canonically
// ordered by (height, lexicographic coords).  Immutable once built.
class RootSystem {
 public:
  static RootSystem build(LieType type, int rank);

  LieType type;
  int rank = 0;
  std::vector<Root> positive;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^v>
  int maximal = -1;                      // index of the highest root

  int count() const { return static_cast<int>(positive.size()); }
  const Root& root(int i) const { return positive[i]; }
  int simple_index(int i) const { return simple_[i]; }  // i in [0, rank)
  bool is_simple(int idx) const { return positive[idx].height == 1; }

  // index of a positive root by coords, or -1
  int index_of(const std::vector<int>& coords) const;
  // alpha + beta as a positive root, or -1
  int sum(int a, int b) const { return sum_[a][b]; }
  // alpha <= beta in the root order (beta - alpha a nonnegative combination)
  bool leq(int a, int b) const;
  // <alpha, alpha_i^v>
  int weight(int i, int a) const;
  // pairing (m, alpha) = sum m_j d_j
  long pairing(const std::vector<int>& m, int a) const;
  // length p of the alpha_i-string below beta inside the positive roots
  int string_down(int i, int beta) const;

  // classical forms: leading epsilon index (1-based)
  int first_eps_index(int a) const;
  // epsilon_i + epsilon_j (i <= j; 2 epsilon_i reported as (i,i)), or nullopt
  std::optional<std::pair<int, int>> plus_pair(int a) const;
  // index of epsilon_i - epsilon_j / epsilon_i + epsilon_j / epsilon_i / 2 epsilon_i
  int eps_minus(int i, int j) const;
  int eps_plus(int i, int j) const;
  int eps_single(int i) const;
  int eps_double(int i) const;

  std::string label(int a) const;
  int parse_label(const std::string& s) const;  // throws if unknown

 private:
  std::vector<int> simple_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> sum_;
  int find_eps(const std::vector<int>& eps) const;
};

bool upward_closure_test(const std::set<int>& s, const RootSystem& sys);

}  // namespace liedeform

#endif
