#ifndef LIEDEFORM_SUITE_HPP
#define LIEDEFORM_SUITE_HPP

#include <string>
#include <vector>

#include "liedeform/chains.hpp"

namespace liedeform {

struct SuiteConfig {
  std::vector<std::pair<LieType, int>> targets;  // (type, rank)
  std::string emit_dir;                          // empty: no files
  int jobs = 1;
  int verbosity = 1;

  static std::vector<std::pair<LieType, int>> default_sweep();
};

struct TypeReport {
  LieType type;
  int rank = 0;
  int ideal_count = 0;
  bool kbasis_ok = false;
  std::string error;  // nonempty if the context could not be built
  std::string basis_json;  // centralizer and K coefficient tables
  Certificate cartan_limit;
  std::vector<Certificate> chains;
  bool pass = false;
  double millis = 0;
};

struct SuiteResult {
  std::vector<TypeReport> reports;
  bool pass = false;
};

SuiteResult run_suite(const SuiteConfig& cfg);

std::string certificate_json(const Certificate& cert, const LieModel& m);
std::string summary_json(const SuiteResult& res);
// full bracket table of a model, for certificate auditing
std::string model_json(const LieModel& m);

// writes one certificate file per ideal plus a summary; returns file count
int write_suite_files(const SuiteResult& res, const std::string& dir);

}  // namespace liedeform

#endif
