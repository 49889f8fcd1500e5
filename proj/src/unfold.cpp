#include "prismafold/unfold.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace prismafold {

namespace {

const double kPi = 3.14159265358979323846;

int wrap(int i, int n) { return ((i % n) + n) % n; }

Side flip(Side s) { return s == Side::Left ? Side::Right : Side::Left; }

// Facet labels with polygon indices wrapped into range; facet_labels leaves
// runs that cross index 0 unwrapped.
std::vector<VertexRef> wrapped_labels(const Prismatoid& p, const LateralFacet& f) {
  std::vector<VertexRef> ls = facet_labels(f);
  for (VertexRef& l : ls)
    l.index = l.kind == VertexRef::Base ? p.base.wrap(l.index) : p.top.wrap(l.index);
  return ls;
}

bool has_label(const std::vector<VertexRef>& ls, const VertexRef& v) {
  return std::find(ls.begin(), ls.end(), v) != ls.end();
}

// Place one facet across a hinge. `emb` is the facet's own planar embedding
// with `labels` naming its vertices; the hinge gives the target coordinates
// of two of them, and `side` (relative to the directed hinge as given) is
// where the facet's free vertices must land. Returned points/labels are
// reversed so the stored cycle is CCW in the net.
PlacedFacet place_facet(const std::vector<Vec2>& emb, const std::vector<VertexRef>& labels,
                        const PlacedEdge& hinge, Side side, const Tolerances& tol) {
  const int n = static_cast<int>(labels.size());
  int e0 = -1, e1 = -1;
  for (int i = 0; i < n && e0 < 0; ++i) {
    const int j = (i + 1) % n;
    const bool fwd = labels[i] == hinge.labels[0] && labels[j] == hinge.labels[1];
    const bool rev = labels[i] == hinge.labels[1] && labels[j] == hinge.labels[0];
    if (fwd || rev) {
      e0 = i;
      e1 = j;
    }
  }
  if (e0 < 0)
    throw Error(ErrorCode::ChainBroken, "facet does not contain its hinge edge");

  const bool fwd = labels[e0] == hinge.labels[0];
  const std::array<Vec2, 2> src = {emb[e0], emb[e1]};
  const std::array<Vec2, 2> dst = fwd ? std::array<Vec2, 2>{hinge.points[0], hinge.points[1]}
                                      : std::array<Vec2, 2>{hinge.points[1], hinge.points[0]};
  const Side dst_side = fwd ? side : flip(side);
  const Vec2 witness = emb[(e1 + 1) % n];

  const RigidMotion2 motion = hinge_transform(src, dst, witness, dst_side, tol);
  PlacedFacet out;
  out.points.resize(n);
  for (int i = 0; i < n; ++i) out.points[i] = motion.apply(emb[i]);
  out.labels = labels;
  std::reverse(out.points.begin(), out.points.end());
  std::reverse(out.labels.begin(), out.labels.end());
  return out;
}

// Hinge between an already placed facet and the next one, as the shared edge
// in the predecessor's cycle, plus the side away from the predecessor's
// interior.
std::pair<PlacedEdge, Side> hinge_from_pred(const PlacedFacet& pred,
                                            const std::vector<VertexRef>& next_labels) {
  const int n = static_cast<int>(pred.labels.size());
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (!has_label(next_labels, pred.labels[i]) || !has_label(next_labels, pred.labels[j]))
      continue;
    PlacedEdge hinge;
    hinge.labels = {pred.labels[i], pred.labels[j]};
    hinge.points = {pred.points[i], pred.points[j]};
    const Vec2 interior = pred.points[(j + 1) % n];
    return {hinge, flip(side_of(hinge.points[0], hinge.points[1], interior))};
  }
  throw Error(ErrorCode::ChainBroken, "consecutive facets share no edge");
}

}  // namespace

std::vector<Vec2> embed_facet(const std::vector<Vec3>& pts, const Tolerances& tol) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "embed_facet: need >= 3 points");
  double scale = 0.0;
  for (const Vec3& q : pts)
    scale = std::max({scale, std::abs(q.x()), std::abs(q.y()), std::abs(q.z())});
  const double eps_len = tol.eps_geom * std::max(1.0, scale);

  const Vec3 o = pts[0];
  Vec3 e1 = pts[1] - o;
  const double len = e1.norm();
  if (len <= eps_len)
    throw Error(ErrorCode::DegenerateEdge, "embed_facet: first edge has zero length");
  e1 /= len;

  // widest cross product for a stable normal; a convex CCW cycle keeps all
  // of them on the same side, so the pick preserves orientation
  Vec3 nrm = Vec3::Zero();
  double best = 0.0;
  for (int i = 2; i < n; ++i) {
    const Vec3 c = (pts[1] - o).cross(pts[i] - o);
    if (c.norm() > best) {
      best = c.norm();
      nrm = c;
    }
  }
  if (best <= eps_len * eps_len)
    throw Error(ErrorCode::InvalidArgument, "embed_facet: points are collinear");
  nrm.normalize();
  const Vec3 e2 = nrm.cross(e1);

  std::vector<Vec2> out(n);
  for (int i = 0; i < n; ++i) {
    const Vec3 d = pts[i] - o;
    if (std::abs(nrm.dot(d)) > tol.eps_angle * std::max(1.0, scale))
      throw Error(ErrorCode::NonPlanarFacet,
                  "embed_facet: point " + std::to_string(i) + " is off the facet plane");
    out[i] = Vec2(e1.dot(d), e2.dot(d));
  }
  return out;
}

std::vector<PlacedFacet> develop_chain(const Prismatoid& p, const Band& band,
                                       const std::vector<int>& facet_indices,
                                       const PlacedEdge& first_hinge, Side side,
                                       const Tolerances& tol) {
  std::vector<PlacedFacet> out;
  out.reserve(facet_indices.size());
  for (size_t c = 0; c < facet_indices.size(); ++c) {
    const int k = facet_indices[c];
    const LateralFacet& f = band.facets[k];
    const std::vector<Vec2> emb = embed_facet(facet_points_3d(p, f), tol);
    const std::vector<VertexRef> labels = wrapped_labels(p, f);

    PlacedFacet placed;
    if (c == 0) {
      placed = place_facet(emb, labels, first_hinge, side, tol);
    } else {
      const auto [hinge, hside] = hinge_from_pred(out.back(), labels);
      placed = place_facet(emb, labels, hinge, hside, tol);
    }
    placed.id = "band:" + std::to_string(k);
    placed.band_index = k;
    out.push_back(std::move(placed));
  }
  return out;
}

int choose_top_attachment(const std::vector<Vec2>& developed_top_path, const Tolerances& tol) {
  const int n = static_cast<int>(developed_top_path.size());
  if (n < 2)
    throw Error(ErrorCode::InvalidArgument, "choose_top_attachment: need >= 2 path vertices");
  // Largest i whose subpath (v_0, v_i) keeps its curvature, the turns at the
  // interior vertices v_1..v_{i-1}, within pi/2. i = 1 is always admissible
  // (a single edge has no interior vertex).
  int best = 1;
  double sum = 0.0;
  for (int i = 2; i < n; ++i) {
    sum += std::abs(turn_angle_2d(developed_top_path[i - 2], developed_top_path[i - 1],
                                  developed_top_path[i], tol));
    if (sum <= kPi / 2 + tol.eps_angle)
      best = i;
    else
      break;
  }
  return best;
}

DevelopedPath developed_path(const Net& net, Patch patch, VertexRef::Kind kind) {
  DevelopedPath path;
  auto push = [&](const VertexRef& l, const Vec2& pt) {
    if (!path.indices.empty() && path.indices.back() == l.index) return;
    path.indices.push_back(l.index);
    path.points.push_back(pt);
  };
  for (const PlacedFacet& f : net.placed) {
    if (f.patch != patch || f.band_index < 0) continue;
    const int n = static_cast<int>(f.labels.size());
    // stored cycles run tops ascending, then bases descending
    if (kind == VertexRef::Top) {
      for (int i = 0; i < n; ++i)
        if (f.labels[i].kind == kind) push(f.labels[i], f.points[i]);
    } else {
      for (int i = n; i-- > 0;)
        if (f.labels[i].kind == kind) push(f.labels[i], f.points[i]);
    }
  }
  return path;
}

Net unfold(const Prismatoid& p, const Band& band, const CutPlan& plan, const Tolerances& tol) {
  const int ell = p.base.size();
  const int m = p.top.size();
  const int nb = band.size();
  Net net;
  net.placed.reserve(nb + 2);
  std::vector<int> placed_of(nb, -1);

  PlacedFacet basef;
  basef.id = "base";
  basef.patch = Patch::Base;
  basef.points = p.base.vertices;
  for (int j = 0; j < ell; ++j) basef.labels.push_back({VertexRef::Base, j});
  net.placed.push_back(std::move(basef));

  auto base_edge_hinge = [&](const std::array<int, 2>& e) {
    PlacedEdge hinge;
    hinge.labels = {VertexRef{VertexRef::Base, e[0]}, VertexRef{VertexRef::Base, e[1]}};
    hinge.points = {p.base.at(e[0]), p.base.at(e[1])};
    return hinge;
  };
  auto append = [&](std::vector<PlacedFacet>&& chain, Patch patch) {
    for (PlacedFacet& f : chain) {
      f.patch = patch;
      placed_of[f.band_index] = static_cast<int>(net.placed.size());
      net.placed.push_back(std::move(f));
    }
  };

  // M-: unroll backward from the facet over e^-, which sits at the arc's end;
  // the base polygon lies left of its CCW edges, so outward is Right
  {
    std::vector<int> order;
    for (int c = plan.m_minus.count; c-- > 0;) order.push_back(wrap(plan.m_minus.first + c, nb));
    std::vector<PlacedFacet> chain =
        develop_chain(p, band, order, base_edge_hinge(plan.e_minus), Side::Right, tol);
    std::reverse(chain.begin(), chain.end());
    append(std::move(chain), Patch::MMinus);
  }

  // M+: unroll forward from the facet over e^+, then backward from its other
  // lateral edge toward the arc's start
  const int fplus = facet_of_base_edge(band, ell, plan.e_plus[0]);
  {
    const int pos = wrap(fplus - plan.m_plus.first, nb);
    std::vector<int> fwd;
    for (int c = pos; c < plan.m_plus.count; ++c) fwd.push_back(wrap(plan.m_plus.first + c, nb));
    std::vector<PlacedFacet> fchain =
        develop_chain(p, band, fwd, base_edge_hinge(plan.e_plus), Side::Right, tol);

    std::vector<PlacedFacet> bchain;
    if (pos > 0) {
      std::vector<int> back;
      for (int c = pos; c-- > 0;) back.push_back(wrap(plan.m_plus.first + c, nb));
      const auto [hinge, hside] =
          hinge_from_pred(fchain.front(), wrapped_labels(p, band.facets[back.front()]));
      bchain = develop_chain(p, band, back, hinge, hside, tol);
      std::reverse(bchain.begin(), bchain.end());
    }
    append(std::move(bchain), Patch::MPlus);
    append(std::move(fchain), Patch::MPlus);
  }

  // top: attach across the developed M+ top path edge chosen by the prefix
  // turn rule, away from the owning facet
  const DevelopedPath tpath = developed_path(net, Patch::MPlus, VertexRef::Top);
  if (tpath.points.size() < 2)
    throw Error(ErrorCode::DegenerateHull, "top boundary of M+ has no edge to attach the top");
  const int attach = choose_top_attachment(tpath.points, tol);
  const int a = tpath.indices[attach];
  net.top_attach_index = a;
  const int owner = placed_of[facet_of_top_edge(band, m, wrap(a - 1, m))];

  {
    std::vector<Vec3> tpts;
    std::vector<VertexRef> tlabels;
    for (int i = 0; i < m; ++i) {
      tpts.push_back(p.top_vertex(i));
      tlabels.push_back({VertexRef::Top, i});
    }
    const std::vector<Vec2> emb = embed_facet(tpts, tol);
    const auto [hinge, hside] = hinge_from_pred(net.placed[owner], tlabels);
    PlacedFacet topf = place_facet(emb, tlabels, hinge, hside, tol);
    topf.id = "top";
    topf.patch = Patch::Top;
    net.placed.push_back(std::move(topf));
  }

  // attachment tree: the two base hinges, the lateral hinges interior to each
  // arc in band order, and the top hinge
  auto lateral_hinges = [&](const FacetArc& arc) {
    for (int c = 0; c + 1 < arc.count; ++c) {
      const int k = wrap(arc.first + c, nb);
      const int k2 = wrap(arc.first + c + 1, nb);
      const LateralEdgeRef e = facet_end_edge(band.facets[k], ell, m);
      net.attach_tree.push_back({placed_of[k], placed_of[k2],
                                 {VertexRef{VertexRef::Base, e.base}, VertexRef{VertexRef::Top, e.top}}});
    }
  };
  const int t0m = wrap(plan.m_minus.first + plan.m_minus.count - 1, nb);
  net.attach_tree.push_back({0, placed_of[t0m],
                             {VertexRef{VertexRef::Base, plan.e_minus[0]},
                              VertexRef{VertexRef::Base, plan.e_minus[1]}}});
  lateral_hinges(plan.m_minus);
  net.attach_tree.push_back({0, placed_of[fplus],
                             {VertexRef{VertexRef::Base, plan.e_plus[0]},
                              VertexRef{VertexRef::Base, plan.e_plus[1]}}});
  lateral_hinges(plan.m_plus);
  net.attach_tree.push_back({owner, static_cast<int>(net.placed.size()) - 1,
                             {VertexRef{VertexRef::Top, wrap(a - 1, m)}, VertexRef{VertexRef::Top, a}}});

  // cut edges: every surface edge not in the tree
  for (int j = 0; j < ell; ++j) {
    if (j == plan.e_minus[0] || j == plan.e_plus[0]) continue;
    net.cut_edges.push_back(
        {VertexRef{VertexRef::Base, j}, VertexRef{VertexRef::Base, wrap(j + 1, ell)}});
  }
  net.cut_edges.push_back({VertexRef{VertexRef::Base, plan.cut_edge_0.base},
                           VertexRef{VertexRef::Top, plan.cut_edge_0.top}});
  net.cut_edges.push_back({VertexRef{VertexRef::Base, plan.cut_edge_k.base},
                           VertexRef{VertexRef::Top, plan.cut_edge_k.top}});
  for (int i = 0; i < m; ++i) {
    if (i == wrap(a - 1, m)) continue;
    net.cut_edges.push_back(
        {VertexRef{VertexRef::Top, i}, VertexRef{VertexRef::Top, wrap(i + 1, m)}});
  }

  net.cone_frame = cone_frame_for(p, plan, tol);
  return net;
}

ConeFrame cone_frame_for(const Prismatoid& p, const CutPlan& plan, const Tolerances& tol) {
  // the base interior lies on the left of its CCW edges
  ConeFrame cf;
  auto edge_line = [&](const std::array<int, 2>& e) {
    Line2 line;
    line.point = p.base.at(e[0]);
    line.dir = (p.base.at(e[1]) - p.base.at(e[0])).normalized();
    return line;
  };
  cf.minus_line = edge_line(plan.e_minus);
  cf.plus_line = edge_line(plan.e_plus);
  cf.minus_normal = Vec2(-cf.minus_line.dir.y(), cf.minus_line.dir.x());
  cf.plus_normal = Vec2(-cf.plus_line.dir.y(), cf.plus_line.dir.x());
  if (plan.case_tag == CaseTag::Case1) {
    cf.apex = p.base.at(plan.w0);
  } else {
    const double den = cross2(cf.minus_line.dir, cf.plus_line.dir);
    if (std::abs(den) <= tol.eps_geom)
      throw Error(ErrorCode::DegenerateHull, "attachment edge lines are parallel");
    const double t = cross2(cf.plus_line.point - cf.minus_line.point, cf.plus_line.dir) / den;
    cf.apex = cf.minus_line.point + t * cf.minus_line.dir;
  }
  return cf;
}

}  // namespace prismafold
