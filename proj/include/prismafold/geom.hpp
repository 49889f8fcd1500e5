#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace prismafold {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

/// Tolerance bundle threaded through every predicate. All epsilons are
/// relative: predicates scale them by the magnitude of their inputs, so
/// callers are expected to keep coordinates near unit scale (the generators
/// normalize the base into [-1,1]^2).
struct Tolerances {
  double eps_geom = 1e-9;    // exact-predicate surrogate (orientation, contact)
  double eps_verify = 1e-7;  // verification slack (overlap depth, cone containment)
  double eps_angle = 1e-9;   // angular comparisons, radians

  Tolerances() = default;
  Tolerances(double geom, double verify, double angle)
      : eps_geom(geom), eps_verify(verify), eps_angle(angle) {
    if (!(eps_geom > 0) || !(eps_verify > 0) || !(eps_angle > 0) || eps_geom > eps_verify)
      throw std::invalid_argument("Tolerances: need 0 < eps_geom <= eps_verify, eps_angle > 0");
  }
};

enum class ErrorCode {
  NotConvex,
  NotCCW,
  NotNested,
  NonPositiveHeight,
  DegenerateHull,
  ZeroLengthEdge,
  LengthMismatch,
  DegenerateEdge,
  NonPlanarFacet,
  ChainBroken,
  CutEdgeMissing,
  GenerationFailed,
  ParseError,
  InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for the whole library; `code()` identifies the
/// failure class, the message carries diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), m_code(code) {}

  ErrorCode code() const { return m_code; }

 private:
  ErrorCode m_code;
};

enum class Orientation { CCW, CW, Collinear };
enum class Side { Left, Right };
enum class PointClass { StrictlyInside, OnBoundary, Outside };

inline double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Orientation of the triple (p, q, r). Collinear when the doubled signed
/// area is within eps_geom * scale^2, scale being the largest coordinate
/// magnitude among the inputs.
Orientation orientation(const Vec2& p, const Vec2& q, const Vec2& r, const Tolerances& tol = {});

/// Signed turn at v when walking prev -> v -> next, in (-pi, pi]; positive is
/// a left (counterclockwise) turn. Throws ZeroLengthEdge if either edge is
/// shorter than eps_geom * scale.
double turn_angle_2d(const Vec2& prev, const Vec2& v, const Vec2& next, const Tolerances& tol = {});

/// Interior angle at `apex` between rays to `a` and `b`, in [0, pi].
double face_angle_3d(const Vec3& apex, const Vec3& a, const Vec3& b, const Tolerances& tol = {});

/// Planar isometry: rotation plus translation, with an optional leading
/// reflection across the x axis. apply(x) = R(angle) * (reflect ? (x0,-x1) : x) + translation.
struct RigidMotion2 {
  double angle = 0.0;
  bool reflect = false;
  Vec2 translation = Vec2::Zero();

  Vec2 apply(const Vec2& p) const;
};

/// Rigid motion taking segment src to segment dst (endpoints to endpoints, in
/// order) such that the image of `witness` lies on `side` of the directed
/// segment dst. Inserts a reflection when the proper motion puts the witness
/// on the wrong side. Throws LengthMismatch if |src| != |dst| (relative
/// eps_geom), DegenerateEdge if either segment is near zero length, and
/// InvalidArgument if the witness is collinear with src (side undecidable).
RigidMotion2 hinge_transform(const std::array<Vec2, 2>& src, const std::array<Vec2, 2>& dst,
                             const Vec2& witness, Side side, const Tolerances& tol = {});

/// True iff the open segments (a0,a1) and (b0,b1) share a point. Touching at
/// endpoints or along a shared endpoint within eps_verify does not count.
bool segments_properly_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1,
                                 const Tolerances& tol = {});

/// True iff two convex CCW polygons overlap with interior penetration depth
/// greater than eps_verify * scale (separating-axis test over both edge
/// normal sets). Shared edges or vertices alone return false. Throws
/// NotConvex if an input fails a strict convexity walk.
bool convex_overlap(const std::vector<Vec2>& a, const std::vector<Vec2>& b,
                    const Tolerances& tol = {});

/// Classify a point against a strictly convex CCW polygon with an
/// eps_geom-wide boundary band.
PointClass point_in_convex(const Vec2& p, const std::vector<Vec2>& poly,
                           const Tolerances& tol = {});

/// Signed distance from p to the polygon boundary, positive inside. Used for
/// nesting margins.
double convex_inner_distance(const Vec2& p, const std::vector<Vec2>& poly);

/// Strict convexity + CCW walk used by polygon validation and convex_overlap.
bool is_strictly_convex_ccw(const std::vector<Vec2>& poly, const Tolerances& tol = {});

double polygon_signed_area(const std::vector<Vec2>& poly);

Side side_of(const Vec2& from, const Vec2& to, const Vec2& p);

}  // namespace prismafold
