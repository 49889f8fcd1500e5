#include "prismafold/geom.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace prismafold {

namespace {

double max_abs_coord(std::initializer_list<Vec2> pts) {
  double s = 0.0;
  for (const Vec2& p : pts) s = std::max({s, std::abs(p.x()), std::abs(p.y())});
  return s;
}

}  // namespace

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotCCW: return "NotCCW";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::NonPositiveHeight: return "NonPositiveHeight";
    case ErrorCode::DegenerateHull: return "DegenerateHull";
    case ErrorCode::ZeroLengthEdge: return "ZeroLengthEdge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateEdge: return "DegenerateEdge";
    case ErrorCode::NonPlanarFacet: return "NonPlanarFacet";
    case ErrorCode::ChainBroken: return "ChainBroken";
    case ErrorCode::CutEdgeMissing: return "CutEdgeMissing";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Orientation orientation(const Vec2& p, const Vec2& q, const Vec2& r, const Tolerances& tol) {
  const double area2 = cross2(q - p, r - p);
  const double scale = max_abs_coord({p, q, r});
  if (std::abs(area2) <= tol.eps_geom * scale * scale) return Orientation::Collinear;
  return area2 > 0 ? Orientation::CCW : Orientation::CW;
}

double turn_angle_2d(const Vec2& prev, const Vec2& v, const Vec2& next, const Tolerances& tol) {
  const Vec2 in = v - prev;
  const Vec2 out = next - v;
  const double scale = max_abs_coord({prev, v, next});
  if (in.norm() <= tol.eps_geom * scale || out.norm() <= tol.eps_geom * scale)
    throw Error(ErrorCode::ZeroLengthEdge, "turn_angle_2d: edge shorter than eps_geom * scale");
  return std::atan2(cross2(in, out), in.dot(out));
}

double face_angle_3d(const Vec3& apex, const Vec3& a, const Vec3& b, const Tolerances& tol) {
  const Vec3 u = a - apex;
  const Vec3 v = b - apex;
  const double scale = std::max({apex.cwiseAbs().maxCoeff(), a.cwiseAbs().maxCoeff(),
                                 b.cwiseAbs().maxCoeff()});
  if (u.norm() <= tol.eps_geom * scale || v.norm() <= tol.eps_geom * scale)
    throw Error(ErrorCode::ZeroLengthEdge, "face_angle_3d: ray shorter than eps_geom * scale");
  // atan2 form is stable near 0 and pi.
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

Vec2 RigidMotion2::apply(const Vec2& p) const {
  Vec2 q = reflect ? Vec2(p.x(), -p.y()) : p;
  const double c = std::cos(angle), s = std::sin(angle);
  return Vec2(c * q.x() - s * q.y(), s * q.x() + c * q.y()) + translation;
}

RigidMotion2 hinge_transform(const std::array<Vec2, 2>& src, const std::array<Vec2, 2>& dst,
                             const Vec2& witness, Side side, const Tolerances& tol) {
  const Vec2 ds = src[1] - src[0];
  const Vec2 dd = dst[1] - dst[0];
  const double ls = ds.norm(), ld = dd.norm();
  const double scale = std::max({max_abs_coord({src[0], src[1]}), max_abs_coord({dst[0], dst[1]})});
  if (ls <= tol.eps_geom * scale || ld <= tol.eps_geom * scale)
    throw Error(ErrorCode::DegenerateEdge, "hinge_transform: segment shorter than eps_geom * scale");
  if (std::abs(ls - ld) > tol.eps_geom * std::max(ls, ld))
    throw Error(ErrorCode::LengthMismatch,
                "hinge_transform: |src|=" + std::to_string(ls) + " |dst|=" + std::to_string(ld));
  if (orientation(src[0], src[1], witness, tol) == Orientation::Collinear)
    throw Error(ErrorCode::InvalidArgument, "hinge_transform: witness collinear with src");

  // Proper motion first; flip to the improper one when the witness image
  // lands on the wrong side of dst.
  RigidMotion2 m;
  m.angle = std::atan2(dd.y(), dd.x()) - std::atan2(ds.y(), ds.x());
  {
    const double c = std::cos(m.angle), s = std::sin(m.angle);
    m.translation = dst[0] - Vec2(c * src[0].x() - s * src[0].y(), s * src[0].x() + c * src[0].y());
  }
  const Side got = side_of(dst[0], dst[1], m.apply(witness));
  if (got != side) {
    // Improper isometry: conjugate source, i.e. m(z) = e^{i a} * conj(z) + t.
    m.reflect = true;
    m.angle = std::atan2(dd.y(), dd.x()) + std::atan2(ds.y(), ds.x());
    const double c = std::cos(m.angle), s = std::sin(m.angle);
    m.translation = dst[0] - Vec2(c * src[0].x() + s * src[0].y(), s * src[0].x() - c * src[0].y());
  }
  return m;
}

Side side_of(const Vec2& from, const Vec2& to, const Vec2& p) {
  return cross2(to - from, p - from) >= 0 ? Side::Left : Side::Right;
}

bool segments_properly_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1,
                                 const Tolerances& tol) {
  const double scale = std::max(max_abs_coord({a0, a1}), max_abs_coord({b0, b1}));
  const double eps = tol.eps_verify * scale * scale;
  const double d1 = cross2(b1 - b0, a0 - b0);
  const double d2 = cross2(b1 - b0, a1 - b0);
  const double d3 = cross2(a1 - a0, b0 - a0);
  const double d4 = cross2(a1 - a0, b1 - a0);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
      ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps)))
    return true;
  // Collinear overlap: positive-length shared stretch of the open segments.
  if (std::abs(d1) <= eps && std::abs(d2) <= eps && std::abs(d3) <= eps && std::abs(d4) <= eps) {
    const Vec2 dir = a1 - a0;
    const double len = dir.norm();
    if (len <= tol.eps_geom * scale) return false;
    double t0 = dir.dot(b0 - a0) / (len * len);
    double t1 = dir.dot(b1 - a0) / (len * len);
    if (t0 > t1) std::swap(t0, t1);
    const double shared = std::min(1.0, t1) - std::max(0.0, t0);
    return shared * len > tol.eps_verify * scale;
  }
  return false;
}

bool is_strictly_convex_ccw(const std::vector<Vec2>& poly, const Tolerances& tol) {
  const size_t n = poly.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    const Vec2& r = poly[(i + 2) % n];
    if (orientation(p, q, r, tol) != Orientation::CCW) return false;
  }
  return true;
}

double polygon_signed_area(const std::vector<Vec2>& poly) {
  double s = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) s += cross2(poly[i], poly[(i + 1) % n]);
  return 0.5 * s;
}

namespace {

// Penetration depth along axis n (not normalized): overlap of the projection
// intervals divided by |n|.
double axis_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b, const Vec2& n) {
  double amin = std::numeric_limits<double>::infinity(), amax = -amin;
  double bmin = amin, bmax = -amin;
  for (const Vec2& p : a) {
    const double d = n.dot(p);
    amin = std::min(amin, d);
    amax = std::max(amax, d);
  }
  for (const Vec2& p : b) {
    const double d = n.dot(p);
    bmin = std::min(bmin, d);
    bmax = std::max(bmax, d);
  }
  return (std::min(amax, bmax) - std::max(amin, bmin)) / n.norm();
}

}  // namespace

bool convex_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b, const Tolerances& tol) {
  if (!is_strictly_convex_ccw(a, tol) || !is_strictly_convex_ccw(b, tol))
    throw Error(ErrorCode::NotConvex, "convex_overlap: input polygon not strictly convex CCW");
  double scale = 0.0;
  for (const Vec2& p : a) scale = std::max({scale, std::abs(p.x()), std::abs(p.y())});
  for (const Vec2& p : b) scale = std::max({scale, std::abs(p.x()), std::abs(p.y())});
  double depth = std::numeric_limits<double>::infinity();
  auto scan = [&](const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
      const Vec2 e = poly[(i + 1) % n] - poly[i];
      depth = std::min(depth, axis_overlap(a, b, Vec2(-e.y(), e.x())));
      if (depth <= 0) return;
    }
  };
  scan(a);
  if (depth > 0) scan(b);
  return depth > tol.eps_verify * scale;
}

PointClass point_in_convex(const Vec2& p, const std::vector<Vec2>& poly, const Tolerances& tol) {
  if (poly.size() < 3)
    throw Error(ErrorCode::InvalidArgument, "point_in_convex: polygon needs >= 3 vertices");
  double scale = std::max(std::abs(p.x()), std::abs(p.y()));
  for (const Vec2& q : poly) scale = std::max({scale, std::abs(q.x()), std::abs(q.y())});
  const double inner = convex_inner_distance(p, poly);
  if (inner > tol.eps_geom * scale) return PointClass::StrictlyInside;
  if (inner < -tol.eps_geom * scale) return PointClass::Outside;
  return PointClass::OnBoundary;
}

double convex_inner_distance(const Vec2& p, const std::vector<Vec2>& poly) {
  double best = std::numeric_limits<double>::infinity();
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    const Vec2 e = b - a;
    const double len = e.norm();
    if (len == 0) continue;
    best = std::min(best, cross2(e, p - a) / len);
  }
  return best;
}

}  // namespace prismafold
