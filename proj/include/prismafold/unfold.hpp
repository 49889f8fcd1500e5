#pragma once

#include "prismafold/rmcut.hpp"

#include <array>
#include <string>
#include <vector>

namespace prismafold {

enum class Patch { Base, MPlus, MMinus, Top };

/// One facet of the net. Points are CCW in the plane; the net shows the
/// surface from inside the solid, so a band facet's point order is the
/// reverse of its outside-CCW 3D cycle. labels[i] names the polytope vertex
/// placed at points[i]. band_index is -1 for the base and top facets.
struct PlacedFacet {
  std::string id;
  int band_index = -1;
  Patch patch = Patch::Base;
  std::vector<Vec2> points;
  std::vector<VertexRef> labels;
};

/// Hinge of the attachment tree: placed facets `a` and `b` share the surface
/// edge between the two named polytope vertices.
struct HingeRecord {
  int facet_a = 0;
  int facet_b = 0;
  std::array<VertexRef, 2> edge;
};

/// Apex and the two attachment-edge lines that split the plane into the four
/// cones used by containment checks. The unit normals point to the side of
/// each line holding the base interior.
struct ConeFrame {
  Vec2 apex = Vec2::Zero();
  Line2 minus_line, plus_line;  // through the developed e^- / e^+
  Vec2 minus_normal = Vec2::UnitY(), plus_normal = Vec2::UnitY();
};

struct Net {
  std::vector<PlacedFacet> placed;
  std::vector<HingeRecord> attach_tree;
  std::vector<std::array<VertexRef, 2>> cut_edges;
  int top_attach_index = 0;  // top placed across (v_{i-1}, v_i)
  ConeFrame cone_frame;
};

/// Isometric planar copy of a planar 3D cycle: pairwise distances preserved,
/// CCW exactly when the cycle is CCW around its own plane normal (so a facet
/// cycle ordered CCW from outside embeds CCW). Throws NonPlanarFacet when a
/// point leaves the plane of the first three by more than eps_angle * scale.
std::vector<Vec2> embed_facet(const std::vector<Vec3>& pts, const Tolerances& tol = {});

/// A placed surface edge: endpoint labels with their net coordinates, used
/// to anchor the first facet of a chain.
struct PlacedEdge {
  std::array<VertexRef, 2> labels;
  std::array<Vec2, 2> points;
};

/// Hinge-by-hinge development of band facets, in the order given. The first
/// facet is placed across first_hinge with its free vertices on `side` of
/// the directed hinge; each later facet lands across its shared edge with
/// the predecessor, on the side away from it. Throws ChainBroken when a
/// facet does not contain the edge it must hinge on.
std::vector<PlacedFacet> develop_chain(const Prismatoid& p, const Band& band,
                                       const std::vector<int>& facet_indices,
                                       const PlacedEdge& first_hinge, Side side,
                                       const Tolerances& tol = {});

/// Attachment vertex for the top: the largest path index i >= 1 such that
/// the curvature of the subpath (v_0, v_i), the turns at its interior
/// vertices v_1..v_{i-1}, stays within pi/2 (+ eps_angle). The top attaches
/// across the path edge (v_{i-1}, v_i); the subpath before the edge is then
/// radially monotone by the pi/2 bound, and the subpath after it by
/// maximality wherever the path's total turn stays below pi.
int choose_top_attachment(const std::vector<Vec2>& developed_top_path,
                          const Tolerances& tol = {});

/// Full development: base placed identically, M- unrolled backward from e^-,
/// M+ unrolled both ways from e^+, top placed across the chosen edge of the
/// developed M+ top path, away from M+.
Net unfold(const Prismatoid& p, const Band& band, const CutPlan& plan,
           const Tolerances& tol = {});

/// Cone frame induced by the plan's base attachment edges. The base develops
/// at its input coordinates, so the lines run through the e^- and e^+ base
/// edges with inward (base interior) normals; the apex is w0 in Case1 and
/// the crossing of the two lines in Case2 (DegenerateHull when parallel).
ConeFrame cone_frame_for(const Prismatoid& p, const CutPlan& plan, const Tolerances& tol = {});

/// Placed positions of the distinct base or top polygon vertices along the
/// facets of one patch, in band order. indices are polygon indices; points
/// take the first placement of each vertex.
struct DevelopedPath {
  std::vector<int> indices;
  std::vector<Vec2> points;
};

DevelopedPath developed_path(const Net& net, Patch patch, VertexRef::Kind kind);

}  // namespace prismafold
