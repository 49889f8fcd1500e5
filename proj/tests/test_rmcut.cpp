#include "doctest.h"

#include "fixtures.hpp"
#include "prismafold/generate.hpp"
#include "prismafold/rmcut.hpp"

#include <cmath>

using namespace prismafold;

namespace {

const double kPi = 3.14159265358979323846;

ConvexPolygon2 regular_ngon(int n, double r = 1.0) {
  ConvexPolygon2 poly;
  for (int k = 0; k < n; ++k)
    poly.vertices.emplace_back(r * std::cos(2 * kPi * k / n), r * std::sin(2 * kPi * k / n));
  return poly;
}

int wrapi(int i, int n) { return ((i % n) + n) % n; }

// all band facet indices covered exactly once by the two arcs
void check_partition(const Band& band, const CutPlan& plan) {
  const int nb = band.size();
  std::vector<int> hits(nb, 0);
  for (int t = 0; t < plan.m_plus.count; ++t) ++hits[wrapi(plan.m_plus.first + t, nb)];
  for (int t = 0; t < plan.m_minus.count; ++t) ++hits[wrapi(plan.m_minus.first + t, nb)];
  for (int f = 0; f < nb; ++f) CHECK(hits[f] == 1);
}

}  // namespace

TEST_CASE("select_base_root cases and tie-breaks") {
  const ConvexPolygon2 square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  auto [w0_sq, tag_sq] = select_base_root(square);
  CHECK(w0_sq == 0);
  CHECK(tag_sq == CaseTag::Case1);

  const ConvexPolygon2 hex = regular_ngon(6);
  auto [w0_hex, tag_hex] = select_base_root(hex);
  CHECK(w0_hex == 0);
  CHECK(tag_hex == CaseTag::Case2);

  // sharpest corner wins: the vertex with the smallest interior angle
  const ConvexPolygon2 tri{{{0, 0}, {4, 0}, {0, 3}}};
  auto [w0_tri, tag_tri] = select_base_root(tri);
  CHECK(w0_tri == 1);
  CHECK(tag_tri == CaseTag::Case1);
  CHECK(vertex_curvature(tri, 1) == doctest::Approx(kPi - std::atan2(3, 4)));
}

TEST_CASE("select_wk_prismoid walks to the half-turn") {
  const ConvexPolygon2 square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  CHECK(select_wk_prismoid(square, 0) == 2);
  CHECK(select_wk_prismoid(square, 1) == 3);
  CHECK(select_wk_prismoid(square, 3) == 1);
  CHECK(select_wk_prismoid(regular_ngon(6), 0) == 3);
  CHECK(select_wk_prismoid(regular_ngon(3), 0) == 2);
  CHECK(select_wk_prismoid(regular_ngon(12), 0) == 6);
}

TEST_CASE("select_eplus: first edge in Case1, quarter-turn prefix in Case2") {
  const ConvexPolygon2 square{{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}};
  CHECK(select_eplus(square, 0, CaseTag::Case1) == std::array<int, 2>{0, 1});
  CHECK(select_eplus(square, 2, CaseTag::Case1) == std::array<int, 2>{2, 3});

  const ConvexPolygon2 hex = regular_ngon(6);
  CHECK(select_eplus(hex, 0, CaseTag::Case2) == std::array<int, 2>{1, 2});
  CHECK(select_eplus(hex, 2, CaseTag::Case2) == std::array<int, 2>{3, 4});

  CHECK(select_eplus(regular_ngon(12), 0, CaseTag::Case2) == std::array<int, 2>{2, 3});
}

TEST_CASE("select_cut_general on the unit frustum") {
  const Prismatoid p = fixtures::unit_frustum();
  const Band band = compute_band(p);
  const GeneralCut cut = select_cut_general(p, band, 0);
  CHECK(cut.wk == 1);
  CHECK(cut.vk_plus == 1);
  CHECK(cut.v0_minus == 0);
}

TEST_CASE("identify_shadow on the unit frustum") {
  const Prismatoid p = fixtures::unit_frustum();
  const Band band = compute_band(p);
  const ShadowFrame s = identify_shadow(p, band, 0, 1);
  CHECK(s.v0_minus == 0);
  CHECK(s.v0_plus == 0);
  CHECK(s.vk_minus == 1);
  CHECK(s.vk_plus == 1);
  REQUIRE(s.v_star_0.has_value());
  REQUIRE(s.v_star_k.has_value());
  CHECK((*s.v_star_0 - Vec2(-0.5, -0.5)).norm() < 1e-12);
  CHECK((*s.v_star_k - Vec2(0.5, -0.5)).norm() < 1e-12);
  CHECK(s.gamma0.first == s.gamma0.last);    // empty
  CHECK(s.gamma_k.first == s.gamma_k.last);  // empty
  CHECK(s.gamma_plus.first == 0);
  CHECK(s.gamma_plus.last == 1);
  CHECK(s.gamma_minus.first == 1);
  CHECK(s.gamma_minus.last == 0);
}

TEST_CASE("plan_cut pins on the unit frustum, both schemes") {
  const Prismatoid p = fixtures::unit_frustum();
  const Band band = compute_band(p);

  const CutPlan pr = plan_cut(p, band, Scheme::Prismoid);
  CHECK(pr.scheme == Scheme::Prismoid);
  CHECK(pr.case_tag == CaseTag::Case1);
  CHECK(pr.w0 == 0);
  CHECK(pr.wk == 2);
  CHECK(pr.cut_edge_0 == LateralEdgeRef{0, 0});
  CHECK(pr.cut_edge_k == LateralEdgeRef{2, 2});
  CHECK(pr.e_minus == std::array<int, 2>{3, 0});
  CHECK(pr.e_plus == std::array<int, 2>{0, 1});
  CHECK(pr.m_plus.first == 0);
  CHECK(pr.m_plus.count == 2);
  CHECK(pr.m_minus.first == 2);
  CHECK(pr.m_minus.count == 2);
  CHECK_FALSE(pr.shadow.has_value());
  check_partition(band, pr);

  const CutPlan ge = plan_cut(p, band, Scheme::General);
  CHECK(ge.scheme == Scheme::General);
  CHECK(ge.wk == 1);
  CHECK(ge.cut_edge_0 == LateralEdgeRef{0, 0});
  CHECK(ge.cut_edge_k == LateralEdgeRef{1, 1});
  CHECK(ge.m_plus.count == 1);
  CHECK(ge.m_minus.count == 3);
  CHECK(ge.shadow.has_value());
  check_partition(band, ge);

  // Auto picks the prismoid scheme on an all-quad band
  CHECK(plan_cut(p, band, Scheme::Auto).scheme == Scheme::Prismoid);
}

TEST_CASE("plan_cut dispatch on a general band") {
  const Prismatoid p = fixtures::pentagon_triangle();
  const Band band = compute_band(p);
  CHECK(plan_cut(p, band, Scheme::Auto).scheme == Scheme::General);
  CHECK_THROWS_AS(plan_cut(p, band, Scheme::Prismoid), Error);
}

TEST_CASE("plan invariants over a random corpus") {
  int general_plans = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.base_vertices = 3 + int(seed % 9);
    cfg.top_vertices = 3 + int((seed / 9) % 9);
    cfg.prismoid_mode = (seed % 3 == 0);
    const Prismatoid p =
        cfg.prismoid_mode ? gen_nested_prismoid(cfg) : gen_nested_prismatoid(cfg);
    const Band band = compute_band(p);
    const CutPlan plan = plan_cut(p, band, Scheme::Auto);
    check_partition(band, plan);
    CHECK(plan.wk != plan.w0);

    if (plan.scheme == Scheme::Prismoid) {
      // path (w_0, w_k) stays below a half turn
      CHECK(path_curvature(p.base, plan.w0, plan.wk) < kPi);
    } else {
      ++general_plans;
      // path (w_k, w_0) may reach pi but not exceed it
      CHECK(path_curvature(p.base, plan.wk, plan.w0) <= kPi + 1e-9);
      REQUIRE(plan.shadow.has_value());
      const ShadowFrame& s = *plan.shadow;

      // adjacency picks agree with the closer-to-v-star rule when v* exists
      auto check_closer = [&](const std::optional<Vec2>& vstar, int base_edge, bool end_side,
                              int picked) {
        if (!vstar) return;
        const LateralFacet& f =
            band.facets[facet_of_base_edge(band, p.base.size(), base_edge)];
        int best = -1;
        double best_d = 1e18;
        for (int a = 0; a < f.top_count; ++a) {
          const int idx = p.top.wrap(f.top_first + a);
          const double d = (p.top.at(idx) - *vstar).norm();
          if (d < best_d - 1e-12) {
            best_d = d;
            best = idx;
          }
        }
        (void)end_side;
        CHECK(best == picked);
      };
      const int ell = p.base.size();
      check_closer(s.v_star_0, (plan.w0 + ell - 1) % ell, true, s.v0_minus);
      check_closer(s.v_star_0, plan.w0, false, s.v0_plus);
      check_closer(s.v_star_k, (plan.wk + ell - 1) % ell, true, s.vk_minus);
      check_closer(s.v_star_k, plan.wk, false, s.vk_plus);

      // fan property: facets with a top edge strictly inside gamma0 are
      // triangles sharing base vertex w0; same at wk
      auto check_fan = [&](const TopArc& arc, int w) {
        for (int t = arc.first; t != arc.last; t = p.top.wrap(t + 1)) {
          const int f = facet_of_top_edge(band, p.top.size(), t);
          CHECK(band.facets[f].kind == FacetKind::Triangle);
          CHECK(band.facets[f].base_count == 1);
          CHECK(p.base.wrap(band.facets[f].base_first) == w);
        }
      };
      check_fan(s.gamma0, plan.w0);
      check_fan(s.gamma_k, plan.wk);
    }
  }
  CHECK(general_plans > 30);  // corpus actually exercises the general scheme
}
