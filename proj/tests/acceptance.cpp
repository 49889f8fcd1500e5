// Release gate: one line per shipped guarantee, each checked at its stated
// tolerance. Runs the two fuzz corpora once and reuses their aggregates for
// the per-net bounds, then pins the hand-checkable square frustum and the
// cut case rules. Exit status is the number of failed lines, capped at 1.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "prismafold/fuzz.hpp"
#include "prismafold/generate.hpp"
#include "prismafold/rmcut.hpp"
#include "prismafold/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace prismafold;

namespace {

const double kPi = 3.14159265358979323846;

int g_failures = 0;

void line(int num, bool ok, const std::string& what, const std::string& detail) {
  std::printf("[%d] %s  %s (%s)\n", num, ok ? "pass" : "FAIL", what.c_str(), detail.c_str());
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

double agg(const FuzzReport& r, const std::string& key, double missing) {
  const auto it = r.aggregates.find(key);
  return it == r.aggregates.end() ? missing : it->second;
}

// Worst edge-endpoint derivative of distance-to-start along the path,
// normalized by edge length; positive means strictly radially monotone.
double radial_margin(const std::vector<Vec2>& path) {
  double m = std::numeric_limits<double>::infinity();
  const Vec2 s = path.front();
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    const Vec2 d = path[t + 1] - path[t];
    const double len = d.norm();
    if (t > 0) m = std::min(m, d.dot(path[t] - s) / len);
    m = std::min(m, d.dot(path[t + 1] - s) / len);
  }
  return m;
}

ConvexPolygon2 regular_ngon(int n, double r = 1.0) {
  ConvexPolygon2 poly;
  for (int k = 0; k < n; ++k)
    poly.vertices.emplace_back(r * std::cos(2 * kPi * k / n), r * std::sin(2 * kPi * k / n));
  return poly;
}

Prismatoid random_instance(std::uint64_t seed, bool prismoid) {
  GenConfig g;
  g.seed = seed;
  g.base_vertices = 3 + static_cast<int>(seed % 10);
  g.top_vertices = 3 + static_cast<int>((seed * 7 + 3) % 10);
  g.prismoid_mode = prismoid;
  return prismoid ? gen_nested_prismoid(g) : gen_nested_prismatoid(g);
}

}  // namespace

int main() {
  FuzzConfig base_cfg;
  base_cfg.count = 1000;
  base_cfg.seed = 0;
  base_cfg.min_vertices = 3;
  base_cfg.max_vertices = 12;

  // 1: prismoid corpus, no overlaps, bounded runtime
  FuzzConfig c1 = base_cfg;
  c1.prismoid = true;
  const auto t0 = std::chrono::steady_clock::now();
  const FuzzReport r1 = run_fuzz(c1);
  const double secs1 =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  int overlap_fails = 0;
  for (const FuzzFailure& f : r1.failures)
    if (f.check == "simple") ++overlap_fails;
  line(1, overlap_fails == 0 && secs1 < 60.0,
       "1000 random prismoids unfold without facet overlap at 1e-7",
       std::to_string(overlap_fails) + " overlap failures, " + fmt(secs1) + " s");

  // 2: general corpus, every check, no unresolvable cut selections
  const FuzzReport r2 = run_fuzz(base_cfg);
  const double missing2 = agg(r2, "cut_edge_missing", 0.0);
  line(2, r2.failed == 0 && missing2 == 0.0,
       "1000 random prismatoids pass every verification check",
       std::to_string(r2.failed) + " failures, " + fmt(missing2) + " unresolvable cuts");

  // 3: development is an isometry to 1e-9 relative
  const double edge_dev = std::max(agg(r1, "max_edge_dev", 0.0), agg(r2, "max_edge_dev", 0.0));
  line(3, edge_dev <= 1e-9, "max relative edge deviation across both corpora <= 1e-9",
       "max " + fmt(edge_dev));

  // 4: developed band turns strictly inside (0, projected turn); prismoid
  // top/base turns agree pairwise and edges stay parallel
  const double min_turn = std::min(agg(r1, "min_turn", 1.0), agg(r2, "min_turn", 1.0));
  const double min_upper =
      std::min(agg(r1, "min_upper_margin", 1.0), agg(r2, "min_upper_margin", 1.0));
  const double pair_dev = agg(r1, "max_pair_turn_dev", 0.0);
  const double par_dev = agg(r1, "max_parallel_dev", 0.0);
  line(4,
       min_turn >= 1e-9 && min_upper >= 1e-9 && pair_dev <= 1e-9 && par_dev <= 1e-9,
       "developed turns stretched with margin >= 1e-9, prismoid pairs within 1e-9",
       "min turn " + fmt(min_turn) + ", min upper margin " + fmt(min_upper) + ", pair dev " +
           fmt(pair_dev) + ", parallel dev " + fmt(par_dev));

  // 5: cone containment on every net
  const double cones1 = agg(r1, "cones_passed", 0.0), cones2 = agg(r2, "cones_passed", 0.0);
  line(5, cones1 == static_cast<double>(r1.total) && cones2 == static_cast<double>(r2.total),
       "cone containment holds on 100% of both corpora at slack 1e-7",
       fmt(cones1) + "/" + std::to_string(r1.total) + " prismoid, " + fmt(cones2) + "/" +
           std::to_string(r2.total) + " general");

  // 6: every vertex is pointed with angle sum below 2 pi
  Tolerances tol;
  double worst_angle = 0.0;
  bool angles_ok = true;
  std::string angle_err;
  for (int i = 0; i < 200 && angles_ok; ++i) {
    try {
      const Prismatoid p = random_instance(1000 + i, i % 2 == 1);
      const Band band = compute_band(p);
      for (int j = 0; j < p.base.size(); ++j)
        worst_angle = std::max(worst_angle, total_angle(p, band, {VertexRef::Base, j}, tol));
      for (int j = 0; j < p.top.size(); ++j)
        worst_angle = std::max(worst_angle, total_angle(p, band, {VertexRef::Top, j}, tol));
    } catch (const Error& e) {
      angles_ok = false;
      angle_err = e.what();
    }
  }
  angles_ok = angles_ok && worst_angle < 2 * kPi - 1e-9;
  line(6, angles_ok, "vertex angle sums stay below 2 pi - 1e-9 on 200 instances",
       angle_err.empty() ? "max " + fmt(worst_angle) + " vs " + fmt(2 * kPi) : angle_err);

  // 7: square frustum pins (base [-1,1]^2, top half size, height 1)
  {
    const Prismatoid p = fixtures::unit_frustum();
    const Band band = compute_band(p);
    std::string err;

    const double lat = (p.top_vertex(0) - p.base_vertex(0)).norm();
    if (std::abs(lat - 1.224745) > 1e-6) err += " lateral edge " + fmt(lat) + ";";

    const Vec3 d = (p.base_vertex(1) - p.base_vertex(0)).normalized();
    const Vec3 v = p.top_vertex(0) - p.base_vertex(0);
    const double trap_h = (v - d * d.dot(v)).norm();
    if (std::abs(trap_h - 1.118034) > 1e-6) err += " trapezoid height " + fmt(trap_h) + ";";

    const double top_sum = total_angle(p, band, {VertexRef::Top, 0}, tol);
    const double top_expect = kPi / 2 + 2 * std::acos(-0.5 / std::sqrt(1.5));
    if (std::abs(top_sum - top_expect) > 1e-6) err += " top angle sum " + fmt(top_sum) + ";";

    const CutPlan pr = plan_cut(p, band, Scheme::Prismoid);
    const Net net = unfold(p, band, pr);
    const DevelopedPath bp = developed_path(net, Patch::MPlus, VertexRef::Base);
    double dev_turn = 0.0;
    if (bp.points.size() >= 3)
      dev_turn = std::abs(turn_angle_2d(bp.points[0], bp.points[1], bp.points[2], tol));
    if (std::abs(dev_turn - 0.841068) > 1e-6) err += " developed turn " + fmt(dev_turn) + ";";

    if (pr.w0 != 0 || pr.wk != 2 || pr.e_plus != std::array<int, 2>{0, 1} ||
        pr.e_minus != std::array<int, 2>{3, 0} || net.top_attach_index != 2)
      err += " prismoid plan;";

    const CutPlan gen = plan_cut(p, band, Scheme::General);
    if (gen.wk != 1 || gen.cut_edge_0.base != 0 || gen.cut_edge_0.top != 0 ||
        gen.cut_edge_k.base != 1 || gen.cut_edge_k.top != 1)
      err += " general plan;";

    line(7, err.empty(), "square frustum matches its closed-form pins",
         err.empty() ? "edge " + fmt(lat) + ", height " + fmt(trap_h) + ", turn " +
                           fmt(dev_turn) + ", top sum " + fmt(top_sum)
                     : err);
  }

  // 8: cross-checks against brute-force oracles
  {
    int band_mismatches = 0;
    std::string err;
    for (int i = 0; i < 200; ++i) {
      try {
        const Prismatoid p = random_instance(3000 + i, i % 2 == 1);
        const Band band = compute_band(p);
        if (oracle::band_facet_keys(band, p.base.size(), p.top.size()) !=
            oracle::hull_lateral_facets(p))
          ++band_mismatches;
      } catch (const Error& e) {
        ++band_mismatches;
        err = e.what();
      }
    }

    std::mt19937_64 rng(424242);
    int tested = 0, rm_mismatches = 0;
    while (tested < 100) {
      std::vector<Vec2> path;
      path.push_back(Vec2(uniform_in(rng, 0.5, 1.5), uniform_in(rng, -0.5, 0.5)));
      const int edges = uniform_int(rng, 2, 6);
      const bool outward = tested % 2 == 0;  // mix both verdicts
      for (int e = 0; e < edges; ++e) {
        double ang;
        if (outward && path.size() > 1) {
          const Vec2 away = path.back() - path.front();
          ang = std::atan2(away.y(), away.x()) + uniform_in(rng, -1.1, 1.1);
        } else {
          ang = uniform_in(rng, 0.0, 2.0 * kPi);
        }
        path.push_back(path.back() + uniform_in(rng, 0.2, 1.0) *
                                         Vec2(std::cos(ang), std::sin(ang)));
      }
      if (std::abs(radial_margin(path)) < 1e-3) continue;  // epsilon-band ties
      ++tested;
      if (check_radially_monotone(path) != oracle::radially_monotone_sampled(path, path.front()))
        ++rm_mismatches;
    }
    line(8, band_mismatches == 0 && rm_mismatches == 0,
         "band facets match hull oracle (200), radial monotonicity matches sampling (100)",
         std::to_string(band_mismatches) + " band, " + std::to_string(rm_mismatches) +
             " monotonicity mismatches" + (err.empty() ? "" : "; " + err));
  }

  // 9: cut case rules on the square and the regular hexagon
  {
    const ConvexPolygon2 square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
    const auto [w0_sq, tag_sq] = select_base_root(square);
    const bool sq_ok = tag_sq == CaseTag::Case1 && w0_sq == 0 &&
                       select_eplus(square, w0_sq, tag_sq) == std::array<int, 2>{0, 1};
    const ConvexPolygon2 hex = regular_ngon(6);
    const auto [w0_hex, tag_hex] = select_base_root(hex);
    const bool hex_ok = tag_hex == CaseTag::Case2 && w0_hex == 0 &&
                        select_eplus(hex, w0_hex, tag_hex) == std::array<int, 2>{1, 2};
    line(9, sq_ok && hex_ok, "square picks the corner rule, hexagon the quarter-turn rule",
         std::string(sq_ok ? "square ok" : "square WRONG") + ", " +
             (hex_ok ? "hexagon ok" : "hexagon WRONG"));
  }

  return g_failures == 0 ? 0 : 1;
}
