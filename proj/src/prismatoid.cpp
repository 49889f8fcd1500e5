#include "prismafold/prismatoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace prismafold {

namespace {

bool finite_poly(const std::vector<Vec2>& poly) {
  for (const Vec2& p : poly)
    if (!std::isfinite(p.x()) || !std::isfinite(p.y())) return false;
  return true;
}

}  // namespace

Prismatoid validate(std::vector<Vec2> base, std::vector<Vec2> top, double height,
                    const Tolerances& tol) {
  auto check_poly = [&](const std::vector<Vec2>& poly, const char* which) {
    if (poly.size() < 3 || !finite_poly(poly))
      throw Error(ErrorCode::NotConvex, std::string(which) + ": need >= 3 finite vertices");
    if (!is_strictly_convex_ccw(poly, tol)) {
      std::vector<Vec2> rev(poly.rbegin(), poly.rend());
      if (is_strictly_convex_ccw(rev, tol))
        throw Error(ErrorCode::NotCCW, std::string(which) + ": vertices ordered clockwise");
      throw Error(ErrorCode::NotConvex, std::string(which) + ": not strictly convex");
    }
  };
  check_poly(base, "base");
  check_poly(top, "top");
  if (!(height > 0.0))
    throw Error(ErrorCode::NonPositiveHeight, "height = " + std::to_string(height));
  for (size_t i = 0; i < top.size(); ++i) {
    if (point_in_convex(top[i], base, tol) != PointClass::StrictlyInside)
      throw Error(ErrorCode::NotNested,
                  "top vertex " + std::to_string(i) + " not strictly inside base");
  }
  Prismatoid p;
  p.base.vertices = std::move(base);
  p.top.vertices = std::move(top);
  p.height = height;
  return p;
}

namespace {

// Unit normal of the plane through a base edge (w0, w1) and a top vertex v.
// With the base counterclockwise in z = 0 and the top above it, the normal
// points away from the hull whether or not the plane is supporting, so the
// sign of n.dot(q - w0) classifies q robustly even for over-rotated planes.
Vec3 edge_plane_normal(const Vec3& w0, const Vec3& w1, const Vec3& v) {
  Vec3 n = (w1 - w0).cross(v - w0);
  const double len = n.norm();
  if (len == 0.0) return Vec3::Zero();
  return n / len;
}

}  // namespace

Band compute_band(const Prismatoid& p, const Tolerances& tol) {
  const int ell = p.base.size();
  const int m = p.top.size();
  double scale = p.height;
  for (const Vec2& q : p.base.vertices) scale = std::max({scale, std::abs(q.x()), std::abs(q.y())});
  const double plane_eps = tol.eps_angle * scale;

  // Supporting plane through base edge (w_0, w_1): it touches the top at the
  // vertex (or edge) of minimum inward distance from the edge line.
  const Vec2 d = p.base.at(1) - p.base.at(0);
  const Vec2 u = Vec2(d.y(), -d.x()).normalized();  // outward normal of the base edge
  int i_star = 0;
  double t_min = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    const double t = -u.dot(p.top.at(i) - p.base.at(0));
    if (t < t_min) {
      t_min = t;
      i_star = i;
    }
  }
  if (!(t_min > 0))
    throw Error(ErrorCode::DegenerateHull, "top touches the base edge line from inside");

  auto coplanar = [&](const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& q) {
    const Vec3 n = edge_plane_normal(a, b, c);
    if (n.isZero()) return false;
    return std::abs(n.dot(q - a)) <= plane_eps;
  };

  Band band;
  int bi = 0, ti = i_star;  // start lateral edge of the facet being emitted
  {
    const Vec3 w0 = p.base_vertex(0), w1 = p.base_vertex(1);
    const bool prev_on = coplanar(w0, w1, p.top_vertex(i_star), p.top_vertex(i_star - 1 + m));
    const bool next_on = coplanar(w0, w1, p.top_vertex(i_star), p.top_vertex(i_star + 1));
    if (prev_on && next_on)
      throw Error(ErrorCode::DegenerateHull, "three top vertices on one supporting plane");
    if (prev_on) ti = p.top.wrap(i_star - 1);
  }
  const int start_b = bi, start_t = ti;

  int base_adv = 0, top_adv = 0;
  const int max_facets = ell + m;
  while (true) {
    if (band.size() > max_facets)
      throw Error(ErrorCode::DegenerateHull, "band walk failed to close");
    const Vec3 wb = p.base_vertex(bi);
    const Vec3 wb1 = p.base_vertex(bi + 1);
    const Vec3 vt = p.top_vertex(ti);
    const Vec3 vt1 = p.top_vertex(ti + 1);

    const Vec3 n = edge_plane_normal(wb, wb1, vt);
    if (n.isZero())
      throw Error(ErrorCode::DegenerateHull, "degenerate supporting plane in band walk");
    const double s = n.dot(vt1 - wb);

    LateralFacet facet;
    facet.base_first = bi;
    facet.top_first = ti;
    if (s < -plane_eps) {
      facet.kind = FacetKind::Triangle;
      facet.base_count = 2;
      facet.top_count = 1;
      bi = p.base.wrap(bi + 1);
      ++base_adv;
    } else if (s > plane_eps) {
      facet.kind = FacetKind::Triangle;
      facet.base_count = 1;
      facet.top_count = 2;
      ti = p.top.wrap(ti + 1);
      ++top_adv;
    } else {
      facet.kind = FacetKind::Quad;
      facet.base_count = 2;
      facet.top_count = 2;
      bi = p.base.wrap(bi + 1);
      ti = p.top.wrap(ti + 1);
      ++base_adv;
      ++top_adv;
    }
    band.facets.push_back(facet);
    if (bi == start_b && ti == start_t) break;
  }
  if (base_adv != ell || top_adv != m)
    throw Error(ErrorCode::DegenerateHull, "band walk did not cover both boundaries exactly once");
  return band;
}

bool is_prismoid(const Band& band) {
  for (const LateralFacet& f : band.facets)
    if (f.kind != FacetKind::Quad) return false;
  return true;
}

double vertex_curvature(const ConvexPolygon2& poly, int i, const Tolerances& tol) {
  return turn_angle_2d(poly.at(i - 1 + poly.size()), poly.at(i), poly.at(i + 1), tol);
}

double path_curvature(const ConvexPolygon2& poly, int i, int k, const Tolerances& tol) {
  i = poly.wrap(i);
  k = poly.wrap(k);
  if (i == k)
    throw Error(ErrorCode::InvalidArgument, "path_curvature: path endpoints coincide");
  double sum = 0.0;
  for (int t = poly.wrap(i + 1); t != k; t = poly.wrap(t + 1)) sum += vertex_curvature(poly, t, tol);
  return sum;
}

std::vector<Vec3> facet_points_3d(const Prismatoid& p, const LateralFacet& f) {
  std::vector<Vec3> pts;
  for (int a = 0; a < f.base_count; ++a) pts.push_back(p.base_vertex(f.base_first + a));
  for (int a = f.top_count - 1; a >= 0; --a) pts.push_back(p.top_vertex(f.top_first + a));
  return pts;
}

std::vector<VertexRef> facet_labels(const LateralFacet& f) {
  std::vector<VertexRef> labels;
  for (int a = 0; a < f.base_count; ++a) labels.push_back({VertexRef::Base, f.base_first + a});
  for (int a = f.top_count - 1; a >= 0; --a) labels.push_back({VertexRef::Top, f.top_first + a});
  return labels;
}

namespace {

int wrap_index(int i, int n) { return ((i % n) + n) % n; }

bool facet_covers(int first, int count, int idx, int n) {
  for (int a = 0; a < count; ++a)
    if (wrap_index(first + a, n) == idx) return true;
  return false;
}

}  // namespace

double total_angle(const Prismatoid& p, const Band& band, const VertexRef& v,
                   const Tolerances& tol) {
  const bool top = v.kind == VertexRef::Top;
  const ConvexPolygon2& poly = top ? p.top : p.base;
  const int n = poly.size();
  const int idx = wrap_index(v.index, n);

  // Interior angle of the horizontal facet itself.
  double sum = M_PI - vertex_curvature(poly, idx, tol);

  for (const LateralFacet& f : band.facets) {
    const bool covers = top ? facet_covers(f.top_first, f.top_count, idx, n)
                            : facet_covers(f.base_first, f.base_count, idx, n);
    if (!covers) continue;
    const std::vector<Vec3> pts = facet_points_3d(p, f);
    const std::vector<VertexRef> labels = facet_labels(f);
    for (size_t c = 0; c < labels.size(); ++c) {
      const VertexRef lab{top ? VertexRef::Top : VertexRef::Base, idx};
      VertexRef norm = labels[c];
      norm.index = wrap_index(norm.index, norm.kind == VertexRef::Top ? p.top.size() : p.base.size());
      if (!(norm == lab)) continue;
      const size_t sz = pts.size();
      sum += face_angle_3d(pts[c], pts[(c + sz - 1) % sz], pts[(c + 1) % sz], tol);
      break;
    }
  }
  return sum;
}

FlatProjection project_flat(const Prismatoid& p, const Band& band) {
  FlatProjection fp;
  for (const LateralFacet& f : band.facets) {
    std::vector<Vec2> cell;
    for (const Vec3& q : facet_points_3d(p, f)) cell.emplace_back(q.x(), q.y());
    fp.cells.push_back(std::move(cell));
  }
  return fp;
}

int facet_of_base_edge(const Band& band, int ell, int j) {
  j = wrap_index(j, ell);
  for (int f = 0; f < band.size(); ++f) {
    const LateralFacet& lf = band.facets[f];
    if (lf.base_count == 2 && wrap_index(lf.base_first, ell) == j) return f;
  }
  throw Error(ErrorCode::DegenerateHull, "base edge " + std::to_string(j) + " not found in band");
}

int facet_of_top_edge(const Band& band, int m, int i) {
  i = wrap_index(i, m);
  for (int f = 0; f < band.size(); ++f) {
    const LateralFacet& lf = band.facets[f];
    if (lf.top_count == 2 && wrap_index(lf.top_first, m) == i) return f;
  }
  throw Error(ErrorCode::DegenerateHull, "top edge " + std::to_string(i) + " not found in band");
}

}  // namespace prismafold
