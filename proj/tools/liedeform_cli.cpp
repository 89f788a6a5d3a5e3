// Command-line front end: enumerate abelian ideals, run the verification
// suite, and solve the diagonal weight system for a partition.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "liedeform/suite.hpp"

using namespace liedeform;

namespace {

constexpr int kUsageError = 2;

std::pair<LieType, int> parse_target(const std::string& type_s, int rank) {
  auto t = type_from_name(type_s);
  if (!t) throw CLI::ValidationError("--type", "unknown type " + type_s);
  if (!is_classical(*t)) {
    int fr = fixed_rank(*t);
    if (rank != 0 && rank != fr)
      throw CLI::ValidationError("--rank", "type " + type_s + " has fixed rank " + std::to_string(fr));
    return {*t, fr};
  }
  if (rank <= 0) throw CLI::ValidationError("--rank", "classical types need --rank");
  return {*t, rank};
}

int cmd_ideals(const std::string& type_s, int rank, const std::string& json_path) {
  auto [t, r] = parse_target(type_s, rank);
  const LieModel& m = model_for(t, r);
  auto ideals = enumerate_ideals(m);
  std::cout << type_name(t) << (is_classical(t) ? std::to_string(r) : "") << ": " << ideals.size()
            << " abelian ideal" << (ideals.size() == 1 ? "" : "s") << " of dimension " << r << "\n";
  for (size_t i = 0; i < ideals.size(); ++i) {
    std::cout << "  [" << i << "] {";
    for (size_t q = 0; q < ideals[i].labels.size(); ++q)
      std::cout << (q ? ", " : "") << ideals[i].labels[q];
    std::cout << "}";
    if (t == LieType::A) {
      Partition mu = partition_of_ideal_A(ideals[i], m.sys);
      std::cout << "  mu = (";
      for (size_t q = 0; q < mu.size(); ++q) std::cout << (q ? "," : "") << mu[q];
      std::cout << ")";
    } else if (is_classical(t)) {
      std::cout << "  class = " << ideal_class_name(classify_BCD(ideals[i], m.sys));
    }
    std::cout << "\n";
  }
  if (!json_path.empty()) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < ideals.size(); ++i) {
      os << (i ? "," : "") << "\n  {\"roots\": [";
      for (size_t q = 0; q < ideals[i].labels.size(); ++q)
        os << (q ? "," : "") << "\"" << ideals[i].labels[q] << "\"";
      os << "]";
      if (t == LieType::A) {
        Partition mu = partition_of_ideal_A(ideals[i], m.sys);
        os << ", \"mu\": [";
        for (size_t q = 0; q < mu.size(); ++q) os << (q ? "," : "") << mu[q];
        os << "]";
      }
      os << "}";
    }
    os << "\n]\n";
    std::ofstream f(json_path);
    f << os.str();
  }
  return 0;
}

int cmd_model(const std::string& type_s, int rank, const std::string& json_path) {
  auto [t, r] = parse_target(type_s, rank);
  const LieModel& m = model_for(t, r);
  std::string dump = model_json(m);
  if (json_path.empty()) {
    std::cout << dump;
  } else {
    std::ofstream f(json_path);
    f << dump;
    std::cout << "bracket table written to " << json_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& type_s, int rank, bool all, const std::string& out_dir, int jobs) {
  SuiteConfig cfg;
  cfg.jobs = jobs;
  if (all || type_s.empty()) {
    cfg.targets = SuiteConfig::default_sweep();
  } else {
    cfg.targets = {parse_target(type_s, rank)};
  }
  std::string dir = out_dir;
  if (dir.empty())
    if (const char* env = std::getenv("LIEDEFORM_OUT")) dir = env;
  SuiteResult res = run_suite(cfg);
  std::printf("%-5s %-5s %-7s %-7s %-7s %-5s %8s\n", "type", "rank", "ideals", "chains", "cartan",
              "pass", "ms");
  for (const auto& r : res.reports) {
    if (!r.error.empty()) {
      std::printf("%-5s %-5d ERROR: %s\n", type_name(r.type).c_str(), r.rank, r.error.c_str());
      continue;
    }
    int ok = 0;
    for (const auto& c : r.chains) ok += c.pass;
    std::string chains = std::to_string(ok) + "/" + std::to_string(r.chains.size());
    std::printf("%-5s %-5d %-7d %-7s %-7s %-5s %8ld\n", type_name(r.type).c_str(), r.rank,
                r.ideal_count, chains.c_str(), r.cartan_limit.pass ? "ok" : "FAIL",
                r.pass ? "pass" : "FAIL", static_cast<long>(r.millis));
  }
  std::cout << (res.pass ? "all checks passed" : "FAILURES present") << "\n";
  if (!dir.empty()) {
    int files = write_suite_files(res, dir);
    std::cout << files << " files written to " << dir << "\n";
  }
  return res.pass ? 0 : 1;
}

int cmd_iemu(const std::string& parts_arg) {
  Partition mu;
  std::stringstream ss(parts_arg);
  std::string part;
  while (std::getline(ss, part, ',')) {
    int v = std::stoi(part);
    if (v <= 0) throw CLI::ValidationError("partition", "parts must be positive");
    mu.push_back(v);
  }
  for (size_t i = 0; i + 1 < mu.size(); ++i)
    if (mu[i] < mu[i + 1]) throw CLI::ValidationError("partition", "parts must be weakly decreasing");
  WeightSolution sol = solve_weight_system(mu);
  int n = 0;
  for (int v : mu) n += v;
  std::cout << "z = (";
  for (size_t i = 0; i < sol.z.size(); ++i) std::cout << (i ? "," : "") << sol.z[i];
  std::cout << ")\nw = (";
  for (size_t i = 0; i < sol.w.size(); ++i) std::cout << (i ? "," : "") << sol.w[i];
  std::cout << ")\nconstraint table (window sums z_j + ... + z_{j+h-1}; * marks the strict minimum):\n";
  auto window = [&](int j, int h) {
    long s = 0;
    for (int k = j; k <= j + h - 1; ++k) s += sol.z[k - 1];
    return s;
  };
  for (int h = 1; h <= n; ++h) {
    int ih = staircase_row(mu, h);
    std::cout << "  h=" << h << ":";
    for (int j = 1; j <= n + 1 - h; ++j)
      std::cout << " " << (j == ih ? "*" : "") << window(j, h);
    std::cout << "\n";
  }
  std::cout << "verified: every inequality holds\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of abelian-ideal degenerations of Jordan subalgebras"};
  app.require_subcommand(1);

  std::string type_s, out_dir, json_path, mu_spec;
  int rank = 0, jobs = 1;
  bool all = false;

  auto* ideals = app.add_subcommand("ideals", "enumerate the n-dimensional abelian ideals");
  ideals->add_option("--type", type_s, "A,B,C,D,G2,F4,E6,E7,E8")->required();
  ideals->add_option("--rank", rank, "rank for classical types");
  ideals->add_option("--json", json_path, "write the ideal list as JSON");

  auto* verify = app.add_subcommand("verify", "run the degeneration verification suite");
  verify->add_option("--type", type_s, "A,B,C,D,G2,F4,E6,E7,E8");
  verify->add_option("--rank", rank, "rank for classical types");
  verify->add_flag("--all", all, "default sweep: A<=8, B/C<=7, D 4..7, exceptional");
  verify->add_option("--out", out_dir, "directory for certificate JSON files");
  verify->add_option("--jobs", jobs, "worker threads");

  auto* iemu = app.add_subcommand("iemu", "solve the diagonal weight system for a partition");
  iemu->add_option("partition", mu_spec, "comma-separated parts, e.g. 4,4,1")->required();

  auto* model = app.add_subcommand("model", "dump the bracket table of a Borel model");
  model->add_option("--type", type_s, "A,B,C,D,G2,F4,E6,E7,E8")->required();
  model->add_option("--rank", rank, "rank for classical types");
  model->add_option("--json", json_path, "write the table to a file");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(ideals)) return cmd_ideals(type_s, rank, json_path);
    if (app.got_subcommand(verify)) return cmd_verify(type_s, rank, all, out_dir, jobs);
    if (app.got_subcommand(iemu)) return cmd_iemu(mu_spec);
    if (app.got_subcommand(model)) return cmd_model(type_s, rank, json_path);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
