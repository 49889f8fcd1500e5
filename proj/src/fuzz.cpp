#include "prismafold/fuzz.hpp"

#include "prismafold/generate.hpp"
#include "prismafold/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace prismafold {

namespace {

// Size draws come from their own stream so they cannot disturb the shape
// draws inside the generator.
std::pair<int, int> draw_sizes(std::uint64_t seed, const FuzzConfig& cfg) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
  const int b = uniform_int(rng, cfg.min_vertices, cfg.max_vertices);
  const int t = uniform_int(rng, cfg.min_vertices, cfg.max_vertices);
  return {b, t};
}

void agg_min(std::map<std::string, double>& agg, const std::string& k, double v) {
  auto it = agg.find(k);
  if (it == agg.end())
    agg.emplace(k, v);
  else
    it->second = std::min(it->second, v);
}

void agg_max(std::map<std::string, double>& agg, const std::string& k, double v) {
  auto it = agg.find(k);
  if (it == agg.end())
    agg.emplace(k, v);
  else
    it->second = std::max(it->second, v);
}

std::string num17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

FuzzReport run_fuzz(const FuzzConfig& cfg) {
  FuzzReport rep;
  rep.total = cfg.count;
  rep.aggregates["cut_edge_missing"] = 0.0;
  rep.aggregates["cones_passed"] = 0.0;
  rep.aggregates["nets_with_warnings"] = 0.0;

  for (std::uint64_t i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + i;
    GenConfig g;
    g.seed = seed;
    const auto [b, t] = draw_sizes(seed, cfg);
    g.base_vertices = b;
    g.top_vertices = cfg.prismoid ? b : t;
    g.prismoid_mode = cfg.prismoid;

    FuzzFailure fail;
    fail.seed = seed;
    std::string instance;
    bool failed = false;
    try {
      const Prismatoid p = cfg.prismoid ? gen_nested_prismoid(g) : gen_nested_prismatoid(g);
      instance = serialize_instance(p);
      const Band band = compute_band(p);
      const CutPlan plan = plan_cut(p, band, Scheme::Auto);
      const Net net = unfold(p, band, plan);
      const VerifyReport v = verify_net(p, band, plan, net);

      bool warned = false;
      for (const CheckResult& c : v.checks) {
        if (c.status == CheckStatus::Warn) warned = true;
        if (c.name == "cones" && c.status == CheckStatus::Pass)
          rep.aggregates["cones_passed"] += 1.0;
        for (const auto& [key, val] : c.measures) {
          if (key.rfind("min_", 0) == 0)
            agg_min(rep.aggregates, key, val);
          else if (key.rfind("max_", 0) == 0)
            agg_max(rep.aggregates, key, val);
        }
      }
      if (warned) rep.aggregates["nets_with_warnings"] += 1.0;

      if (!v.pass()) {
        failed = true;
        for (const CheckResult& c : v.checks)
          if (c.status == CheckStatus::Fail) {
            fail.check = c.name;
            fail.witness = c.witness;
            break;
          }
      }
    } catch (const Error& e) {
      failed = true;
      fail.check = error_code_name(e.code());
      fail.witness = e.what();
      if (e.code() == ErrorCode::CutEdgeMissing) rep.aggregates["cut_edge_missing"] += 1.0;
    }

    if (failed) {
      fail.instance = instance;
      if (!cfg.dump_dir.empty()) {
        std::filesystem::create_directories(cfg.dump_dir);
        std::ofstream out(std::filesystem::path(cfg.dump_dir) /
                          ("fail_" + std::to_string(seed) + ".json"));
        out << instance;
      }
      rep.failures.push_back(std::move(fail));
      ++rep.failed;
    } else {
      ++rep.passed;
    }
  }

  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const FuzzFailure& a, const FuzzFailure& b) { return a.seed < b.seed; });
  return rep;
}

std::string serialize_fuzz_report(const FuzzReport& r) {
  std::string s = "{\n";
  s += "  \"total\": " + std::to_string(r.total) + ",\n";
  s += "  \"passed\": " + std::to_string(r.passed) + ",\n";
  s += "  \"failed\": " + std::to_string(r.failed) + ",\n";
  s += "  \"aggregates\": {";
  bool first = true;
  for (const auto& [k, v] : r.aggregates) {
    s += first ? "\n" : ",\n";
    first = false;
    s += "    \"" + k + "\": " + num17(v);
  }
  s += first ? "},\n" : "\n  },\n";
  s += "  \"failures\": [";
  first = true;
  for (const FuzzFailure& f : r.failures) {
    s += first ? "\n" : ",\n";
    first = false;
    s += "    {\"seed\": " + std::to_string(f.seed) + ", \"check\": \"" + json_escape(f.check) +
         "\", \"witness\": \"" + json_escape(f.witness) + "\", \"instance\": \"" +
         json_escape(f.instance) + "\"}";
  }
  s += first ? "]\n" : "\n  ]\n";
  s += "}\n";
  return s;
}

}  // namespace prismafold
