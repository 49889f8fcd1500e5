#pragma once

#include "prismafold/prismatoid.hpp"

#include <optional>
#include <utility>

namespace prismafold {

enum class Scheme { Prismoid, General, Auto };
enum class CaseTag { Case1, Case2 };

/// Lateral edge (w_base, v_top) of the band, by vertex indices.
struct LateralEdgeRef {
  int base = 0;
  int top = 0;

  bool operator==(const LateralEdgeRef& o) const { return base == o.base && top == o.top; }
};

/// Cyclically contiguous run of band facet indices: first, first+1, ...
/// (mod band size), `count` of them.
struct FacetArc {
  int first = 0;
  int count = 0;
};

/// CCW subpath of the top boundary from vertex `first` to vertex `last`;
/// empty when first == last.
struct TopArc {
  int first = 0;
  int last = 0;
};

struct Line2 {
  Vec2 point = Vec2::Zero();
  Vec2 dir = Vec2::UnitX();
};

/// Traces of the four band facets flanking w_0 and w_k in the top plane.
/// t_i^- / t_i^+ are the intersections of the planes of the facets over base
/// edges (w_{i-1}, w_i) / (w_i, w_{i+1}) with the top plane; v_star is where
/// the two lines meet (absent when parallel). v_i^-/v_i^+ are the top
/// vertices of those facets joined to w_i by a lateral edge; when v_star
/// exists they are also its nearest candidates. The four arcs partition the
/// top boundary CCW.
struct ShadowFrame {
  Line2 t0_minus, t0_plus, tk_minus, tk_plus;
  std::optional<Vec2> v_star_0, v_star_k;
  int v0_minus = 0, v0_plus = 0, vk_minus = 0, vk_plus = 0;
  TopArc gamma0, gamma_plus, gamma_k, gamma_minus;
};

/// Complete cut selection: which lateral edges to cut, how the band splits
/// into the two developed pieces, and which base edges anchor them.
struct CutPlan {
  Scheme scheme = Scheme::Prismoid;  // Prismoid or General, never Auto
  CaseTag case_tag = CaseTag::Case1;
  int w0 = 0;
  int wk = 0;
  LateralEdgeRef cut_edge_0;           // (w_0, its top partner)
  LateralEdgeRef cut_edge_k;           // (w_k, its top partner)
  std::array<int, 2> e_minus = {0, 0};  // base edge (w_{l-1}, w_0), root-relative
  std::array<int, 2> e_plus = {0, 0};
  FacetArc m_plus, m_minus;  // partition of the band facets
  std::optional<ShadowFrame> shadow;  // general scheme only
};

/// Root vertex of the cut: the maximum-curvature vertex when some curvature
/// reaches pi/2 (Case1, lowest index on eps_angle ties), otherwise vertex 0
/// (Case2, all curvatures below pi/2).
std::pair<int, CaseTag> select_base_root(const ConvexPolygon2& base, const Tolerances& tol = {});

/// Absolute index of w_k for the prismoid scheme: the unique offset k >= 1
/// from w0 where the CCW path (w_0, w_k) has curvature < pi but
/// (w_0, w_{k+1}) reaches pi.
int select_wk_prismoid(const ConvexPolygon2& base, int w0, const Tolerances& tol = {});

struct GeneralCut {
  int wk = 0;
  int vk_plus = 0;
  int v0_minus = 0;
};

/// Supporting-line selection for the general scheme. b is the base edge line
/// through (w_{l-1}, w_0); its opposite parallel supporting line touches the
/// base at w_k (on an edge contact, the endpoint maximizing the CCW path
/// (w_k, w_0)). The same construction half a level up: the plane of the
/// facet over (w_{l-1}, w_0) traces a line in the top plane, and the
/// opposite parallel supporting line of the top picks v_k^+ (tie broken by
/// the longer CCW top path (v_k^+, v_0^-)). v_0^- is the top vertex of that
/// facet joined to w_0 by a lateral edge.
GeneralCut select_cut_general(const Prismatoid& p, const Band& band, int w0,
                              const Tolerances& tol = {});

ShadowFrame identify_shadow(const Prismatoid& p, const Band& band, int w0, int wk,
                            const Tolerances& tol = {});

/// Base edge whose development anchors the M+ piece. Case1: (w_0, w_1).
/// Case2: (w_{j-1}, w_j) for the smallest j >= 1 whose root-relative prefix
/// curvature reaches pi/2. Indices returned are absolute.
std::array<int, 2> select_eplus(const ConvexPolygon2& base, int w0, CaseTag case_tag,
                                const Tolerances& tol = {});

/// Full cut plan. Scheme::Auto picks Prismoid exactly when the band is all
/// quads. Throws InvalidArgument when Prismoid is forced on a non-prismoid
/// band, CutEdgeMissing when the general selection does not land on a band
/// lateral edge.
CutPlan plan_cut(const Prismatoid& p, const Band& band, Scheme scheme,
                 const Tolerances& tol = {});

/// Start / end lateral edges of a band facet, wrapped to polygon ranges.
LateralEdgeRef facet_start_edge(const LateralFacet& f, int ell, int m);
LateralEdgeRef facet_end_edge(const LateralFacet& f, int ell, int m);

/// Band facet index whose start (resp. end) lateral edge equals `e`, or -1.
int find_facet_starting(const Band& band, int ell, int m, const LateralEdgeRef& e);
int find_facet_ending(const Band& band, int ell, int m, const LateralEdgeRef& e);

}  // namespace prismafold
