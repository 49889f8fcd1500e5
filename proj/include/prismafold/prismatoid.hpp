#pragma once

#include "prismafold/geom.hpp"

#include <optional>
#include <vector>

namespace prismafold {

/// Strictly convex polygon, vertices in CCW order. Construct via validate()
/// or the checked constructor; both reject convexity/orientation defects.
struct ConvexPolygon2 {
  std::vector<Vec2> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
  const Vec2& at(int i) const { return vertices[wrap(i)]; }
  int wrap(int i) const {
    const int n = size();
    return ((i % n) + n) % n;
  }
};

/// Convex polytope spanned by a base polygon in the z=0 plane and a top
/// polygon in the z=height plane whose projection lies strictly inside the
/// base. Both polygons CCW as seen from above.
struct Prismatoid {
  ConvexPolygon2 base;
  ConvexPolygon2 top;
  double height = 0.0;

  Vec3 base_vertex(int j) const {
    const Vec2& p = base.at(j);
    return Vec3(p.x(), p.y(), 0.0);
  }
  Vec3 top_vertex(int i) const {
    const Vec2& p = top.at(i);
    return Vec3(p.x(), p.y(), height);
  }
};

/// Validates polygon and nesting invariants; throws NotConvex, NotCCW,
/// NotNested or NonPositiveHeight.
Prismatoid validate(std::vector<Vec2> base, std::vector<Vec2> top, double height,
                    const Tolerances& tol = {});

enum class FacetKind { Triangle, Quad };

/// One lateral facet of the band. Covers `base_count` consecutive base
/// vertices starting at `base_first` and `top_count` consecutive top vertices
/// starting at `top_first` (each 1 or 2, at least one of them 2). The facet
/// polygon read CCW from outside is [base ascending, top descending]; the
/// lateral edges are (base_first, top_first) and (base_last, top_last).
struct LateralFacet {
  FacetKind kind = FacetKind::Triangle;
  int base_first = 0;
  int base_count = 1;
  int top_first = 0;
  int top_count = 1;
};

/// Cyclic CCW list of lateral facets, starting with the facet containing
/// base edge (w_0, w_1). Consecutive facets share a lateral edge.
struct Band {
  std::vector<LateralFacet> facets;

  int size() const { return static_cast<int>(facets.size()); }
};

/// Lateral hull facets by a supporting-plane walk around the band. Emits a
/// Quad when a top edge is coplanar with a base edge within eps_angle.
/// Throws DegenerateHull if the walk fails to close.
Band compute_band(const Prismatoid& p, const Tolerances& tol = {});

/// True iff every lateral facet is a Quad (then |top| == |base| and
/// corresponding edges are parallel).
bool is_prismoid(const Band& band);

/// Exterior (turn) angle of the polygon at vertex i; in (0, pi) for strictly
/// convex input.
double vertex_curvature(const ConvexPolygon2& poly, int i, const Tolerances& tol = {});

/// Total curvature of the CCW boundary path from vertex i to vertex k:
/// the sum of exterior angles at the interior vertices of the path.
/// Endpoints contribute nothing; i == k is rejected (InvalidArgument).
double path_curvature(const ConvexPolygon2& poly, int i, int k, const Tolerances& tol = {});

struct VertexRef {
  enum Kind { Base, Top } kind = Base;
  int index = 0;

  bool operator==(const VertexRef& o) const { return kind == o.kind && index == o.index; }
};

/// Sum of the face angles of all facets incident to the vertex, including
/// the top or base polygon itself. Strictly below 2*pi for valid input.
double total_angle(const Prismatoid& p, const Band& band, const VertexRef& v,
                   const Tolerances& tol = {});

/// Vertical projection of the band onto the base plane: one convex cell per
/// facet, CCW. Cells tile the annulus between base and projected top.
struct FlatProjection {
  std::vector<std::vector<Vec2>> cells;
};

FlatProjection project_flat(const Prismatoid& p, const Band& band);

/// 3D vertex cycle of a facet, CCW as seen from outside the polytope.
std::vector<Vec3> facet_points_3d(const Prismatoid& p, const LateralFacet& f);

/// Vertex labels matching facet_points_3d order.
std::vector<VertexRef> facet_labels(const LateralFacet& f);

/// Band facet index owning base edge (j, j+1); every base edge lies in
/// exactly one facet.
int facet_of_base_edge(const Band& band, int ell, int j);

/// Band facet index owning top edge (i, i+1).
int facet_of_top_edge(const Band& band, int m, int i);

}  // namespace prismafold
