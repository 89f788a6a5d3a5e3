#include "liedeform/suite.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>

#include <json.hpp>

namespace liedeform {

using ordered_json = nlohmann::ordered_json;

std::vector<std::pair<LieType, int>> SuiteConfig::default_sweep() {
  std::vector<std::pair<LieType, int>> t;
  for (int n = 1; n <= 8; ++n) t.emplace_back(LieType::A, n);
  for (int n = 2; n <= 7; ++n) t.emplace_back(LieType::B, n);
  for (int n = 2; n <= 7; ++n) t.emplace_back(LieType::C, n);
  for (int n = 4; n <= 7; ++n) t.emplace_back(LieType::D, n);
  t.emplace_back(LieType::G2, 2);
  t.emplace_back(LieType::F4, 4);
  t.emplace_back(LieType::E6, 6);
  t.emplace_back(LieType::E7, 7);
  t.emplace_back(LieType::E8, 8);
  return t;
}

namespace {

ordered_json subspace_json(const Subspace& s, const LieModel& m) {
  ordered_json rows = ordered_json::array();
  for (const QVec& row : s.basis) {
    ordered_json r = ordered_json::array();
    for (int k = 0; k < s.ambient; ++k)
      if (row[k] != 0) r.push_back({m.basis_label(k), to_string(row[k])});
    rows.push_back(std::move(r));
  }
  return rows;
}

ordered_json step_json(const StepRecord& st, const LieModel& m) {
  ordered_json j;
  j["kind"] = st.kind;
  ordered_json params;
  params["note"] = st.params;
  if (!st.direction.empty()) {
    ordered_json d = ordered_json::array();
    for (auto& [lab, val] : st.direction) d.push_back({lab, val});
    params["element"] = std::move(d);
  }
  if (!st.mvec.empty()) params["m"] = st.mvec;
  if (!st.wvec.empty()) params["w"] = st.wvec;
  j["params"] = std::move(params);
  j["target_basis"] = subspace_json(st.target, m);
  j["computed_basis"] = subspace_json(st.computed, m);
  j["equal"] = st.equal;
  return j;
}

ordered_json cert_json_obj(const Certificate& cert, const LieModel& m) {
  ordered_json j;
  j["type"] = type_name(cert.type);
  j["rank"] = cert.rank;
  j["name"] = cert.name;
  j["ideal"] = cert.ideal_labels;
  ordered_json steps = ordered_json::array();
  for (const auto& st : cert.steps) steps.push_back(step_json(st, m));
  j["steps"] = std::move(steps);
  j["pass"] = cert.pass;
  j["millis"] = cert.millis;
  return j;
}

TypeReport run_type(LieType t, int rank) {
  TypeReport rep;
  rep.type = t;
  rep.rank = rank;
  auto t0 = std::chrono::steady_clock::now();
  try {
    TypeContext ctx = make_context(t, rank);
    rep.ideal_count = static_cast<int>(ctx.ideals.size());
    rep.kbasis_ok = true;  // make_context checks the K invariants
    {
      ordered_json j;
      ordered_json jb = ordered_json::array();
      for (const Element& e : ctx.jordan.basis) {
        ordered_json r = ordered_json::array();
        for (auto& [lab, val] : ctx.m->serialize(e)) r.push_back({lab, val});
        jb.push_back(std::move(r));
      }
      j["jordan_basis"] = std::move(jb);
      ordered_json kb;
      for (auto& [h, e] : ctx.k.by_height) {
        ordered_json r = ordered_json::array();
        for (auto& [lab, val] : ctx.m->serialize(e)) r.push_back({lab, val});
        kb[std::to_string(h)] = std::move(r);
      }
      j["k_by_height"] = std::move(kb);
      if (ctx.k.z) {
        ordered_json r = ordered_json::array();
        for (auto& [lab, val] : ctx.m->serialize(*ctx.k.z)) r.push_back({lab, val});
        j["k_z"] = std::move(r);
      }
      rep.basis_json = j.dump(2) + "\n";
    }
    rep.cartan_limit = verify_cartan_limit(ctx);
    rep.pass = rep.cartan_limit.pass;
    for (int i = 0; i < rep.ideal_count; ++i) {
      Certificate c;
      try {
        c = run_chain(ctx, i);
      } catch (const std::exception& e) {
        c.type = t;
        c.rank = rank;
        c.ideal_index = i;
        c.name = "ideal-" + std::to_string(i);
        c.ideal_labels = ctx.ideals[i].labels;
        c.pass = false;
        StepRecord st;
        st.kind = "identity";
        st.params = std::string("exception: ") + e.what();
        c.steps.push_back(std::move(st));
      }
      rep.pass &= c.pass;
      rep.chains.push_back(std::move(c));
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
    rep.pass = false;
  }
  rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& cfg) {
  SuiteResult res;
  res.reports.resize(cfg.targets.size());
  std::atomic<size_t> next{0};
  int jobs = std::max(1, cfg.jobs);
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= cfg.targets.size()) return;
      res.reports[i] = run_type(cfg.targets[i].first, cfg.targets[i].second);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  res.pass = true;
  for (const auto& r : res.reports) res.pass &= r.pass;
  return res;
}

std::string certificate_json(const Certificate& cert, const LieModel& m) {
  return cert_json_obj(cert, m).dump(2) + "\n";
}

std::string model_json(const LieModel& m) {
  ordered_json j;
  j["type"] = type_name(m.sys.type);
  j["rank"] = m.sys.rank;
  ordered_json roots = ordered_json::array();
  for (int r = 0; r < m.sys.count(); ++r) {
    ordered_json rr;
    rr["label"] = m.sys.label(r);
    rr["coords"] = m.sys.root(r).coords;
    rr["height"] = m.sys.root(r).height;
    ordered_json w = ordered_json::array();
    for (int i = 0; i < m.sys.rank; ++i) w.push_back(m.sys.weight(i, r));
    rr["weights"] = std::move(w);
    roots.push_back(std::move(rr));
  }
  j["positive_roots"] = std::move(roots);
  ordered_json table = ordered_json::array();
  for (int a = 0; a < m.sys.count(); ++a)
    for (int b = 0; b < m.sys.count(); ++b) {
      if (m.sys.sum(a, b) < 0 || m.nmat[a][b] == 0) continue;
      table.push_back({m.sys.label(a), m.sys.label(b), to_string(m.nmat[a][b]),
                       m.sys.label(m.sys.sum(a, b))});
    }
  j["brackets"] = std::move(table);
  return j.dump(2) + "\n";
}

std::string summary_json(const SuiteResult& res) {
  ordered_json j;
  ordered_json items = ordered_json::array();
  for (const auto& r : res.reports) {
    ordered_json it;
    it["type"] = type_name(r.type);
    it["rank"] = r.rank;
    it["ideal_count"] = r.ideal_count;
    it["pass"] = r.pass;
    if (!r.error.empty()) it["error"] = r.error;
    it["millis"] = r.millis;
    items.push_back(std::move(it));
  }
  j["results"] = std::move(items);
  j["pass"] = res.pass;
  return j.dump(2) + "\n";
}

int write_suite_files(const SuiteResult& res, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  int files = 0;
  for (const auto& r : res.reports) {
    if (!r.error.empty()) continue;
    const LieModel& m = model_for(r.type, r.rank);
    std::string base = type_name(r.type) + (is_classical(r.type) ? std::to_string(r.rank) : "");
    {
      std::ofstream out(fs::path(dir) / (base + "_cartan_limit.json"));
      out << certificate_json(r.cartan_limit, m);
      ++files;
    }
    {
      std::ofstream out(fs::path(dir) / (base + "_basis.json"));
      out << r.basis_json;
      ++files;
    }
    for (const auto& c : r.chains) {
      std::ofstream out(fs::path(dir) / (base + "_" + c.name + ".json"));
      out << certificate_json(c, m);
      ++files;
    }
  }
  std::ofstream out(fs::path(dir) / "summary.json");
  out << summary_json(res);
  return files + 1;
}

}  // namespace liedeform
