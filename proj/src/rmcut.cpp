#include "prismafold/rmcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace prismafold {

namespace {

const double kPi = 3.14159265358979323846;

int wrap(int i, int n) { return ((i % n) + n) % n; }

double coord_scale(const Prismatoid& p) {
  double s = p.height;
  for (const Vec2& q : p.base.vertices) s = std::max({s, std::abs(q.x()), std::abs(q.y())});
  return s;
}

// Curvature of the CCW path (w_{from}, w_{from+steps}); steps counts edges.
// steps == n means the full cycle (2*pi minus the curvature at the root).
double prefix_curvature(const ConvexPolygon2& poly, int from, int steps, const Tolerances& tol) {
  const int n = poly.size();
  if (steps >= n) return 2 * kPi - vertex_curvature(poly, from, tol);
  if (steps <= 1) return 0.0;
  return path_curvature(poly, from, wrap(from + steps, n), tol);
}

}  // namespace

LateralEdgeRef facet_start_edge(const LateralFacet& f, int ell, int m) {
  return {wrap(f.base_first, ell), wrap(f.top_first, m)};
}

LateralEdgeRef facet_end_edge(const LateralFacet& f, int ell, int m) {
  return {wrap(f.base_first + f.base_count - 1, ell), wrap(f.top_first + f.top_count - 1, m)};
}

int find_facet_starting(const Band& band, int ell, int m, const LateralEdgeRef& e) {
  for (int f = 0; f < band.size(); ++f)
    if (facet_start_edge(band.facets[f], ell, m) == e) return f;
  return -1;
}

int find_facet_ending(const Band& band, int ell, int m, const LateralEdgeRef& e) {
  for (int f = 0; f < band.size(); ++f)
    if (facet_end_edge(band.facets[f], ell, m) == e) return f;
  return -1;
}

std::pair<int, CaseTag> select_base_root(const ConvexPolygon2& base, const Tolerances& tol) {
  const int n = base.size();
  int best = -1;
  double best_curv = -1.0;
  for (int i = 0; i < n; ++i) {
    const double c = vertex_curvature(base, i, tol);
    if (c > best_curv + tol.eps_angle) {
      best_curv = c;
      best = i;
    }
  }
  if (best_curv >= kPi / 2 - tol.eps_angle) return {best, CaseTag::Case1};
  return {0, CaseTag::Case2};
}

int select_wk_prismoid(const ConvexPolygon2& base, int w0, const Tolerances& tol) {
  const int n = base.size();
  for (int k = 1; k < n; ++k) {
    if (prefix_curvature(base, w0, k + 1, tol) >= kPi - tol.eps_angle) return wrap(w0 + k, n);
  }
  // unreachable: the full cycle has curvature 2*pi - curv(w0) > pi
  throw Error(ErrorCode::InvalidArgument, "select_wk_prismoid: no k found");
}

std::array<int, 2> select_eplus(const ConvexPolygon2& base, int w0, CaseTag case_tag,
                                const Tolerances& tol) {
  const int n = base.size();
  if (case_tag == CaseTag::Case1) return {w0, wrap(w0 + 1, n)};
  // Case2: smallest j >= 1 with curv(w_{l-1}, w_j) >= pi/2, measured from
  // the root; the sum starts at the root's own curvature.
  double sum = 0.0;
  for (int j = 1; j < n; ++j) {
    sum += vertex_curvature(base, wrap(w0 + j - 1, n), tol);
    if (sum >= kPi / 2 - tol.eps_angle) return {wrap(w0 + j - 1, n), wrap(w0 + j, n)};
  }
  // unreachable: the sum reaches 2*pi minus two curvatures > pi/2
  throw Error(ErrorCode::InvalidArgument, "select_eplus: no j found");
}

namespace {

// Intersection of a lateral facet's plane with the top plane, projected to
// 2D. Parallel planes cannot occur: a lateral facet always contains a base
// vertex and a top vertex at different heights.
Line2 top_plane_trace(const Prismatoid& p, const LateralFacet& f) {
  const std::vector<Vec3> pts = facet_points_3d(p, f);
  Vec3 n = (pts[1] - pts[0]).cross(pts[2] - pts[0]);
  Line2 line;
  line.point = p.top.at(f.top_first);  // a top vertex lies on both planes
  line.dir = Vec2(-n.y(), n.x()).normalized();
  return line;
}

std::optional<Vec2> line_intersect(const Line2& a, const Line2& b, const Tolerances& tol) {
  const double den = cross2(a.dir, b.dir);
  if (std::abs(den) <= tol.eps_geom) return std::nullopt;  // unit dirs: eps is angular
  const double t = cross2(b.point - a.point, b.dir) / den;
  return a.point + t * a.dir;
}

// Contact set of the supporting line of `poly` in direction -u (minimum
// support value), as the single vertex maximizing the CCW path to `goal`.
// An edge contact within the eps band yields two candidates; the CCW-earlier
// one wins because its path to `goal` is one edge longer.
int min_support_contact(const ConvexPolygon2& poly, const Vec2& u, int goal,
                        const Tolerances& tol) {
  const int n = poly.size();
  double lo = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    lo = std::min(lo, u.dot(poly.at(i)));
    scale = std::max({scale, std::abs(poly.at(i).x()), std::abs(poly.at(i).y())});
  }
  int best = -1;
  int best_len = -1;
  for (int i = 0; i < n; ++i) {
    if (u.dot(poly.at(i)) > lo + tol.eps_geom * std::max(1.0, scale)) continue;
    const int len = wrap(goal - i, n);  // CCW edge count from i to goal
    if (len > best_len) {
      best_len = len;
      best = i;
    }
  }
  return best;
}

}  // namespace

GeneralCut select_cut_general(const Prismatoid& p, const Band& band, int w0,
                              const Tolerances& tol) {
  const int ell = p.base.size();
  const int m = p.top.size();

  // b: the line through e_0^- = (w_{l-1}, w_0); u its outward normal.
  const Vec2 d = p.base.at(w0) - p.base.at(w0 - 1 + ell);
  const Vec2 u = Vec2(d.y(), -d.x()).normalized();

  GeneralCut cut;
  cut.wk = min_support_contact(p.base, u, w0, tol);
  const int rel = wrap(cut.wk - w0, ell);
  if (rel < 1 || rel > ell - 2)
    throw Error(ErrorCode::DegenerateHull,
                "select_cut_general: contact vertex w_" + std::to_string(cut.wk) +
                    " coincides with the root edge");

  // T_0^-: the facet over base edge (w_{l-1}, w_0). Its top-plane trace is
  // parallel to b, so the same direction u serves for the top support.
  const int t0m = facet_of_base_edge(band, ell, wrap(w0 - 1, ell));
  cut.v0_minus = facet_end_edge(band.facets[t0m], ell, m).top;
  cut.vk_plus = min_support_contact(p.top, u, cut.v0_minus, tol);
  return cut;
}

ShadowFrame identify_shadow(const Prismatoid& p, const Band& band, int w0, int wk,
                            const Tolerances& tol) {
  const int ell = p.base.size();
  const int m = p.top.size();
  if (w0 == wk) throw Error(ErrorCode::InvalidArgument, "identify_shadow: w0 == wk");

  const LateralFacet& f0m = band.facets[facet_of_base_edge(band, ell, wrap(w0 - 1, ell))];
  const LateralFacet& f0p = band.facets[facet_of_base_edge(band, ell, w0)];
  const LateralFacet& fkm = band.facets[facet_of_base_edge(band, ell, wrap(wk - 1, ell))];
  const LateralFacet& fkp = band.facets[facet_of_base_edge(band, ell, wk)];

  ShadowFrame s;
  s.t0_minus = top_plane_trace(p, f0m);
  s.t0_plus = top_plane_trace(p, f0p);
  s.tk_minus = top_plane_trace(p, fkm);
  s.tk_plus = top_plane_trace(p, fkp);
  s.v_star_0 = line_intersect(s.t0_minus, s.t0_plus, tol);
  s.v_star_k = line_intersect(s.tk_minus, s.tk_plus, tol);

  // Lateral-edge adjacency: the facet over (w_{i-1}, w_i) meets w_i at its
  // end lateral edge, the facet over (w_i, w_{i+1}) at its start edge.
  s.v0_minus = facet_end_edge(f0m, ell, m).top;
  s.v0_plus = facet_start_edge(f0p, ell, m).top;
  s.vk_minus = facet_end_edge(fkm, ell, m).top;
  s.vk_plus = facet_start_edge(fkp, ell, m).top;

  s.gamma0 = {s.v0_minus, s.v0_plus};
  s.gamma_plus = {s.v0_plus, s.vk_minus};
  s.gamma_k = {s.vk_minus, s.vk_plus};
  s.gamma_minus = {s.vk_plus, s.v0_minus};
  return s;
}

namespace {

// Homothety offset of a prismoid band: top index adjacent to base index j
// across a lateral edge is j + offset.
int prismoid_top_offset(const Band& band, int ell, int m) {
  const LateralEdgeRef e = facet_start_edge(band.facets.front(), ell, m);
  return wrap(e.top - e.base, m);
}

}  // namespace

CutPlan plan_cut(const Prismatoid& p, const Band& band, Scheme scheme, const Tolerances& tol) {
  const int ell = p.base.size();
  const int m = p.top.size();
  const bool quads = is_prismoid(band);
  if (scheme == Scheme::Auto) scheme = quads ? Scheme::Prismoid : Scheme::General;
  if (scheme == Scheme::Prismoid && !quads)
    throw Error(ErrorCode::InvalidArgument, "plan_cut: prismoid scheme on a non-prismoid band");

  CutPlan plan;
  plan.scheme = scheme;
  const auto [w0, tag] = select_base_root(p.base, tol);
  plan.w0 = w0;
  plan.case_tag = tag;
  plan.e_minus = {wrap(w0 - 1, ell), w0};
  plan.e_plus = select_eplus(p.base, w0, tag, tol);

  if (scheme == Scheme::Prismoid) {
    plan.wk = select_wk_prismoid(p.base, w0, tol);
    const int off = prismoid_top_offset(band, ell, m);
    plan.cut_edge_0 = {w0, wrap(w0 + off, m)};
    plan.cut_edge_k = {plan.wk, wrap(plan.wk + off, m)};
  } else {
    const GeneralCut cut = select_cut_general(p, band, w0, tol);
    plan.wk = cut.wk;
    plan.cut_edge_0 = {w0, cut.v0_minus};
    plan.cut_edge_k = {cut.wk, cut.vk_plus};
    plan.shadow = identify_shadow(p, band, w0, cut.wk, tol);
  }

  // M+ runs from the facet opened by the cut at w_0 to the facet closed by
  // the cut at w_k; M- is the complement, ending at the facet over e^-.
  const int first = find_facet_starting(band, ell, m, plan.cut_edge_0);
  const int last = find_facet_ending(band, ell, m, plan.cut_edge_k);
  if (first < 0 || last < 0)
    throw Error(ErrorCode::CutEdgeMissing,
                "plan_cut: cut edge (w_" +
                    std::to_string(first < 0 ? plan.cut_edge_0.base : plan.cut_edge_k.base) +
                    ", v_" +
                    std::to_string(first < 0 ? plan.cut_edge_0.top : plan.cut_edge_k.top) +
                    ") is not a lateral edge of the band");
  const int nb = band.size();
  plan.m_plus = {first, wrap(last - first, nb) + 1};
  plan.m_minus = {wrap(last + 1, nb), nb - plan.m_plus.count};
  if (plan.m_minus.count <= 0)
    throw Error(ErrorCode::DegenerateHull, "plan_cut: M- is empty");

  // structural guarantees: M- ends at the facet over e^-, M+ contains the
  // facet over e^+
  const int t0m = facet_of_base_edge(band, ell, wrap(w0 - 1, ell));
  if (wrap(plan.m_minus.first + plan.m_minus.count - 1, nb) != t0m)
    throw Error(ErrorCode::DegenerateHull, "plan_cut: M- does not end at the e^- facet");
  const int fplus = facet_of_base_edge(band, ell, plan.e_plus[0]);
  if (wrap(fplus - plan.m_plus.first, nb) >= plan.m_plus.count)
    throw Error(ErrorCode::DegenerateHull, "plan_cut: e^+ facet not inside M+");
  return plan;
}

}  // namespace prismafold
