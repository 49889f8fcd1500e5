#include "prismafold/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace prismafold {

namespace {

double net_scale(const Net& net) {
  double s = 1.0;
  for (const PlacedFacet& f : net.placed)
    for (const Vec2& pt : f.points) s = std::max({s, std::abs(pt.x()), std::abs(pt.y())});
  return s;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string ref_name(const VertexRef& r) {
  return (r.kind == VertexRef::Base ? "b" : "t") + std::to_string(r.index);
}

Vec3 vertex3(const Prismatoid& p, const VertexRef& r) {
  return r.kind == VertexRef::Base ? p.base_vertex(r.index) : p.top_vertex(r.index);
}

int find_label(const PlacedFacet& f, const VertexRef& r) {
  for (size_t i = 0; i < f.labels.size(); ++i)
    if (f.labels[i] == r) return static_cast<int>(i);
  return -1;
}

// Fail wins over Warn wins over Pass; the first failure keeps its witness.
void raise_status(CheckResult& r, CheckStatus s, const std::string& witness) {
  if (s == CheckStatus::Fail && r.status != CheckStatus::Fail) {
    r.status = CheckStatus::Fail;
    r.witness = witness;
  } else if (s == CheckStatus::Warn && r.status == CheckStatus::Pass) {
    r.status = CheckStatus::Warn;
    r.witness = witness;
  }
}

}  // namespace

CheckResult check_simple(const Net& net, const Tolerances& tol) {
  CheckResult r{"simple", CheckStatus::Pass, "", {}};
  const auto& f = net.placed;
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) {
      if (convex_overlap(f[i].points, f[j].points, tol)) {
        raise_status(r, CheckStatus::Fail,
                     "facets " + f[i].id + " and " + f[j].id + " have overlapping interiors");
        return r;
      }
    }
  }
  return r;
}

CheckResult check_isometry(const Prismatoid& p, const Band& band, const Net& net,
                           const Tolerances& tol) {
  CheckResult r{"isometry", CheckStatus::Pass, "", {}};
  double max_edge = 0.0, max_pair = 0.0, max_gap = 0.0;
  const double scale = net_scale(net);

  if (static_cast<int>(net.placed.size()) != band.size() + 2)
    raise_status(r, CheckStatus::Fail,
                 "net has " + std::to_string(net.placed.size()) + " facets, band develops to " +
                     std::to_string(band.size() + 2));

  for (const PlacedFacet& f : net.placed) {
    const int n = static_cast<int>(f.points.size());
    if (static_cast<int>(f.labels.size()) != n || n < 3) {
      raise_status(r, CheckStatus::Fail, "facet " + f.id + " has malformed labels");
      continue;
    }

    // The facet must name the vertices of its own 3D original.
    if (f.band_index >= 0) {
      if (f.band_index >= band.size()) {
        raise_status(r, CheckStatus::Fail, "facet " + f.id + " indexes past the band");
        continue;
      }
      std::vector<VertexRef> expect = facet_labels(band.facets[f.band_index]);
      for (VertexRef& v : expect)
        v.index = v.kind == VertexRef::Base ? p.base.wrap(v.index) : p.top.wrap(v.index);
      auto key = [](const VertexRef& v) { return std::make_pair(static_cast<int>(v.kind), v.index); };
      auto order = [&](const VertexRef& a, const VertexRef& b) { return key(a) < key(b); };
      std::vector<VertexRef> got = f.labels;
      std::sort(expect.begin(), expect.end(), order);
      std::sort(got.begin(), got.end(), order);
      bool same = expect.size() == got.size();
      for (size_t i = 0; same && i < got.size(); ++i) same = got[i] == expect[i];
      if (!same)
        raise_status(r, CheckStatus::Fail,
                     "facet " + f.id + " does not name the vertices of band facet " +
                         std::to_string(f.band_index));
    }

    // Congruence with the original: every label-to-label distance preserved.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double d3 = (vertex3(p, f.labels[i]) - vertex3(p, f.labels[j])).norm();
        const double d2 = (f.points[i] - f.points[j]).norm();
        const double rel = std::abs(d2 - d3) / std::max(d3, 1e-300);
        const bool edge = (j == i + 1) || (i == 0 && j == n - 1);
        max_pair = std::max(max_pair, rel);
        if (edge) max_edge = std::max(max_edge, rel);
        if (rel > tol.eps_geom)
          raise_status(r, CheckStatus::Fail,
                       "facet " + f.id + " distance " + ref_name(f.labels[i]) + "-" +
                           ref_name(f.labels[j]) + " off by " + num(rel) + " relative");
      }
    }

    // The base facet anchors the net at its input coordinates.
    if (f.patch == Patch::Base) {
      for (int i = 0; i < n; ++i) {
        if (f.labels[i].kind != VertexRef::Base) continue;
        const double d = (f.points[i] - p.base.at(f.labels[i].index)).norm();
        if (d > tol.eps_geom * scale)
          raise_status(r, CheckStatus::Fail, "base vertex " + ref_name(f.labels[i]) +
                                                 " moved by " + num(d));
      }
    }
  }

  // Hinged edges must coincide endpoint for endpoint.
  const int nf = static_cast<int>(net.placed.size());
  for (const HingeRecord& h : net.attach_tree) {
    if (h.facet_a < 0 || h.facet_a >= nf || h.facet_b < 0 || h.facet_b >= nf) {
      raise_status(r, CheckStatus::Fail, "hinge references a facet outside the net");
      continue;
    }
    const PlacedFacet& fa = net.placed[h.facet_a];
    const PlacedFacet& fb = net.placed[h.facet_b];
    for (const VertexRef& v : h.edge) {
      const int ia = find_label(fa, v);
      const int ib = find_label(fb, v);
      if (ia < 0 || ib < 0) {
        raise_status(r, CheckStatus::Fail,
                     "hinge vertex " + ref_name(v) + " missing from " + fa.id + " or " + fb.id);
        continue;
      }
      const double gap = (fa.points[ia] - fb.points[ib]).norm();
      max_gap = std::max(max_gap, gap);
      if (gap > tol.eps_geom * scale)
        raise_status(r, CheckStatus::Fail, "hinge " + fa.id + "/" + fb.id + " gap " + num(gap) +
                                               " at " + ref_name(v));
    }
  }

  r.measures["max_edge_dev"] = max_edge;
  r.measures["max_pair_dev"] = max_pair;
  r.measures["max_hinge_gap"] = max_gap;
  return r;
}

CheckResult check_cones(const Net& net, const Tolerances& tol) {
  CheckResult r{"cones", CheckStatus::Pass, "", {}};
  const double slack = tol.eps_verify * net_scale(net);
  const ConeFrame& cf = net.cone_frame;
  auto eta_minus = [&](const Vec2& x) { return cf.minus_normal.dot(x - cf.minus_line.point); };
  auto eta_plus = [&](const Vec2& x) { return cf.plus_normal.dot(x - cf.plus_line.point); };

  double worst = -std::numeric_limits<double>::infinity();
  for (const PlacedFacet& f : net.placed) {
    for (size_t i = 0; i < f.points.size(); ++i) {
      const Vec2& x = f.points[i];
      double violation;
      const char* cone;
      if (f.patch == Patch::MMinus) {
        // Sigma^-: beyond the e^- line, base side of the e^+ line.
        violation = std::max(eta_minus(x), -eta_plus(x));
        cone = "Sigma-";
      } else if (f.patch == Patch::MPlus || f.patch == Patch::Top) {
        // Closed Sigma^+ union Sigma^0: beyond the e^+ line.
        violation = eta_plus(x);
        cone = "Sigma+";
      } else {
        continue;
      }
      worst = std::max(worst, violation);
      if (violation > slack) {
        const std::string who =
            f.labels.size() == f.points.size() ? ref_name(f.labels[i]) : std::to_string(i);
        raise_status(r, CheckStatus::Fail, "facet " + f.id + " vertex " + who + " leaves " +
                                               cone + " by " + num(violation) + " (slack " +
                                               num(slack) + ")");
      }
    }
  }
  r.measures["max_violation"] = std::isfinite(worst) ? worst : 0.0;
  return r;
}

bool check_radially_monotone(const std::vector<Vec2>& path, const Tolerances& tol) {
  if (path.size() < 2) return true;
  double scale = 1.0;
  for (const Vec2& pt : path) scale = std::max({scale, std::abs(pt.x()), std::abs(pt.y())});
  const double eps = tol.eps_geom * scale * scale;  // slack for length-squared dots
  const Vec2& s = path.front();
  for (size_t t = 0; t + 1 < path.size(); ++t) {
    const Vec2 d = path[t + 1] - path[t];
    // Distance to s is non-decreasing along the edge iff its derivative is
    // non-negative at both endpoints (it is linear in the edge parameter).
    if (d.dot(path[t] - s) < -eps || d.dot(path[t + 1] - s) < -eps) return false;
  }
  return true;
}

CheckResult check_stretch(const Prismatoid& p, const Band& band, const CutPlan& plan,
                          const Net& net, const Tolerances& tol) {
  CheckResult r{"stretch", CheckStatus::Pass, "", {}};
  const double inf = std::numeric_limits<double>::infinity();
  double min_turn = inf, min_upper = inf;

  struct PathSpec {
    Patch patch;
    VertexRef::Kind kind;
    const ConvexPolygon2* poly;
    const char* tag;
  };
  const PathSpec specs[4] = {
      {Patch::MPlus, VertexRef::Top, &p.top, "M+ top"},
      {Patch::MPlus, VertexRef::Base, &p.base, "M+ base"},
      {Patch::MMinus, VertexRef::Top, &p.top, "M- top"},
      {Patch::MMinus, VertexRef::Base, &p.base, "M- base"},
  };

  DevelopedPath paths[4];
  std::vector<double> dev_turns[4];
  for (int s = 0; s < 4; ++s) {
    paths[s] = developed_path(net, specs[s].patch, specs[s].kind);
    const DevelopedPath& dp = paths[s];
    const int n = static_cast<int>(dp.points.size());
    for (int t = 1; t + 1 < n; ++t) {
      // Developed paths run clockwise, so the flattened turn is the negated
      // signed turn; the projected turn is the polygon's exterior angle.
      const double dev = -turn_angle_2d(dp.points[t - 1], dp.points[t], dp.points[t + 1], tol);
      const double proj = vertex_curvature(*specs[s].poly, dp.indices[t], tol);
      dev_turns[s].push_back(dev);
      min_turn = std::min(min_turn, dev);
      min_upper = std::min(min_upper, proj - dev);
      const std::string at = std::string(specs[s].tag) + " vertex " +
                             ref_name({specs[s].kind, dp.indices[t]}) + ": developed " +
                             num(dev) + ", projected " + num(proj);
      if (dev <= 0.0 || dev >= proj)
        raise_status(r, CheckStatus::Fail, "turn outside (0, projected) at " + at);
      else if (dev <= tol.eps_angle || dev >= proj - tol.eps_angle)
        raise_status(r, CheckStatus::Warn, "turn margin below eps_angle at " + at);
    }
  }
  if (std::isfinite(min_turn)) {
    r.measures["min_turn"] = min_turn;
    r.measures["min_upper_margin"] = min_upper;
  }

  // A prismoid band develops to matching strips: the top path must copy the
  // base path's turns, and corresponding edges must stay parallel.
  if (plan.scheme == Scheme::Prismoid) {
    double max_turn_dev = 0.0, max_angle_dev = 0.0;
    for (int pair = 0; pair < 2; ++pair) {
      const DevelopedPath& tp = paths[2 * pair];
      const DevelopedPath& bp = paths[2 * pair + 1];
      const char* piece = pair == 0 ? "M+" : "M-";
      if (tp.points.size() != bp.points.size()) {
        raise_status(r, CheckStatus::Fail,
                     std::string(piece) + " top and base paths have different lengths");
        continue;
      }
      for (size_t t = 0; t < dev_turns[2 * pair].size(); ++t) {
        const double d = std::abs(dev_turns[2 * pair][t] - dev_turns[2 * pair + 1][t]);
        max_turn_dev = std::max(max_turn_dev, d);
        if (d > tol.eps_angle)
          raise_status(r, CheckStatus::Fail, std::string(piece) + " turn pair " +
                                                 std::to_string(t + 1) + " differs by " + num(d));
      }
      for (size_t t = 0; t + 1 < bp.points.size(); ++t) {
        const Vec2 db = bp.points[t + 1] - bp.points[t];
        const Vec2 dt = tp.points[t + 1] - tp.points[t];
        const double dot = db.dot(dt);
        const double ang = std::atan2(std::abs(cross2(db, dt)), dot);
        max_angle_dev = std::max(max_angle_dev, ang);
        if (dot <= 0.0 || ang > tol.eps_angle)
          raise_status(r, CheckStatus::Fail, std::string(piece) + " edge " + std::to_string(t) +
                                                 " not parallel to its partner (" + num(ang) +
                                                 " rad)");
      }
    }
    r.measures["max_pair_turn_dev"] = max_turn_dev;
    r.measures["max_parallel_dev"] = max_angle_dev;
  }
  return r;
}

namespace {

CheckResult check_designated_prefix(const CutPlan& plan, const Net& net, const Tolerances& tol) {
  CheckResult r{"radially_monotone", CheckStatus::Pass, "", {}};
  const DevelopedPath dp = developed_path(net, Patch::MPlus, VertexRef::Top);
  int pos = -1;
  for (size_t i = 0; i < dp.indices.size(); ++i)
    if (dp.indices[i] == net.top_attach_index) pos = static_cast<int>(i);
  if (pos < 0) {
    raise_status(r, CheckStatus::Fail, "attachment vertex t" +
                                           std::to_string(net.top_attach_index) +
                                           " is not on the developed M+ top path");
    return r;
  }

  // The attachment rule caps the curvature of the subpath up to the
  // attachment vertex at pi/2, which forces radial monotonicity.
  const std::vector<Vec2> prefix(dp.points.begin(), dp.points.begin() + pos + 1);
  if (!check_radially_monotone(prefix, tol))
    raise_status(r, CheckStatus::Fail,
                 "distance to the path start decreases on the prefix ending at t" +
                     std::to_string(net.top_attach_index));

  // Past the attachment the bound only follows when the whole path turns by
  // less than pi, which a prismoid band guarantees and a fan does not.
  if (plan.scheme == Scheme::Prismoid) {
    const std::vector<Vec2> arm(dp.points.begin() + pos, dp.points.end());
    if (!check_radially_monotone(arm, tol))
      raise_status(r, CheckStatus::Fail,
                   "distance to t" + std::to_string(net.top_attach_index) +
                       " decreases on the arm beyond the attachment edge");
  }

  // Curvature split around the attachment vertex, for diagnostics.
  auto turn_sum = [&](int lo, int hi) {
    double s = 0.0;
    for (int t = lo + 1; t < hi; ++t)
      s += std::abs(turn_angle_2d(dp.points[t - 1], dp.points[t], dp.points[t + 1], tol));
    return s;
  };
  r.measures["prefix_turn"] = turn_sum(0, pos);
  r.measures["arm_turn"] = turn_sum(pos, static_cast<int>(dp.points.size()) - 1);
  return r;
}

}  // namespace

VerifyReport verify_net(const Prismatoid& p, const Band& band, const CutPlan& plan,
                        const Net& net, const Tolerances& tol) {
  VerifyReport rep;
  rep.tol = tol;
  rep.checks.push_back(check_simple(net, tol));
  rep.checks.push_back(check_isometry(p, band, net, tol));
  rep.checks.push_back(check_cones(net, tol));
  rep.checks.push_back(check_designated_prefix(plan, net, tol));
  rep.checks.push_back(check_stretch(p, band, plan, net, tol));
  return rep;
}

}  // namespace prismafold
