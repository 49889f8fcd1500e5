#include "prismafold/fuzz.hpp"
#include "prismafold/generate.hpp"
#include "prismafold/io.hpp"
#include "prismafold/rmcut.hpp"
#include "prismafold/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace prismafold;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Warn: return "warn";
    default: return "FAIL";
  }
}

int run_generate(std::uint64_t seed, int base_n, int top_n, bool prismoid,
                 const std::string& out_path) {
  GenConfig cfg;
  cfg.seed = seed;
  cfg.base_vertices = base_n;
  cfg.top_vertices = top_n;
  cfg.prismoid_mode = prismoid;
  const Prismatoid p = prismoid ? gen_nested_prismoid(cfg) : gen_nested_prismatoid(cfg);
  spill(out_path, serialize_instance(p));
  return 0;
}

int run_unfold(const std::string& in_path, const std::string& scheme_name,
               const std::string& net_path, const std::string& svg_path) {
  Scheme scheme = Scheme::Auto;
  if (scheme_name == "prismoid")
    scheme = Scheme::Prismoid;
  else if (scheme_name == "general")
    scheme = Scheme::General;
  const Prismatoid p = parse_instance(slurp(in_path));
  const Band band = compute_band(p);
  const CutPlan plan = plan_cut(p, band, scheme);
  const Net net = unfold(p, band, plan);
  spill(net_path, serialize_net(net, plan));
  if (!svg_path.empty()) spill(svg_path, render_svg(net));
  return 0;
}

int run_verify(const std::string& in_path, const std::string& net_path, double tolerance) {
  Tolerances tol;
  tol.eps_verify = tolerance;
  const Prismatoid p = parse_instance(slurp(in_path));
  const Band band = compute_band(p);
  const auto [net, plan] = parse_net(slurp(net_path), p, band, tol);
  const VerifyReport rep = verify_net(p, band, plan, net, tol);
  for (const CheckResult& c : rep.checks) {
    std::printf("%-18s %s", c.name.c_str(), status_name(c.status));
    if (!c.witness.empty()) std::printf("  %s", c.witness.c_str());
    std::printf("\n");
  }
  std::printf("verdict            %s\n", rep.pass() ? "pass" : "FAIL");
  return rep.pass() ? 0 : 1;
}

int run_fuzz_cmd(const FuzzConfig& cfg) {
  const FuzzReport rep = run_fuzz(cfg);
  std::cout << serialize_fuzz_report(rep) << "\n";
  return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge unfolding of nested prismatoids"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int base_n = 6, top_n = 4;
  bool prismoid = false;
  std::string in_path, out_path, net_path, svg_path;
  std::string scheme_name = "auto";
  double tolerance = Tolerances{}.eps_verify;
  FuzzConfig fuzz_cfg;

  CLI::App* gen = app.add_subcommand("generate", "write a random instance");
  gen->add_option("--seed", seed, "rng seed")->required();
  gen->add_option("--base-vertices", base_n, "base polygon size")->required();
  gen->add_option("--top-vertices", top_n, "top polygon size (ignored with --prismoid)")
      ->required();
  gen->add_flag("--prismoid", prismoid, "top is a homothety of the base");
  gen->add_option("--out", out_path, "instance file to write")->required();

  CLI::App* unf = app.add_subcommand("unfold", "cut and develop an instance into a net");
  unf->add_option("--in", in_path, "instance file")->required();
  unf->add_option("--scheme", scheme_name, "cut scheme")
      ->check(CLI::IsMember({"auto", "prismoid", "general"}));
  unf->add_option("--net", net_path, "net file to write")->required();
  unf->add_option("--svg", svg_path, "also render the net as SVG");

  CLI::App* ver = app.add_subcommand("verify", "recompute checks for an instance/net pair");
  ver->add_option("--in", in_path, "instance file")->required();
  ver->add_option("--net", net_path, "net file")->required();
  ver->add_option("--tolerance", tolerance, "overlap/containment slack");

  CLI::App* fz = app.add_subcommand("fuzz", "generate-unfold-verify over a seed range");
  fz->add_option("--count", fuzz_cfg.count, "instances to run")->required();
  fz->add_option("--seed", fuzz_cfg.seed, "first seed")->required();
  fz->add_option("--min-vertices", fuzz_cfg.min_vertices, "smallest polygon size")->required();
  fz->add_option("--max-vertices", fuzz_cfg.max_vertices, "largest polygon size")->required();
  fz->add_flag("--prismoid", fuzz_cfg.prismoid, "homothety tops only");
  fz->add_option("--dump-dir", fuzz_cfg.dump_dir, "write failing instances here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // 0 covers --help
  }

  try {
    if (gen->parsed()) return run_generate(seed, base_n, top_n, prismoid, out_path);
    if (unf->parsed()) return run_unfold(in_path, scheme_name, net_path, svg_path);
    if (ver->parsed()) return run_verify(in_path, net_path, tolerance);
    return run_fuzz_cmd(fuzz_cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
