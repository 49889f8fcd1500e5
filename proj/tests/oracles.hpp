#pragma once

// Independent reference implementations used only by tests. Deliberately
// brute force; each mirrors a library computation through a different
// algorithm so the two can cross-check.

#include "prismafold/prismatoid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using prismafold::Band;
using prismafold::Prismatoid;
using prismafold::Vec2;
using prismafold::Vec3;

// Facet identity: sorted base vertex indices + sorted top vertex indices.
using FacetKey = std::pair<std::vector<int>, std::vector<int>>;

// Lateral facets of conv(base x {0} u top x {height}) by exhaustive
// supporting-plane search over all vertex triples. A plane is a lateral
// facet plane iff all vertices lie on one side and the contact set touches
// both polygons.
inline std::set<FacetKey> hull_lateral_facets(const Prismatoid& p, double eps = 1e-9) {
  std::vector<Vec3> pts;
  std::vector<std::pair<int, int>> ids;  // (0 = base, 1 = top, index)
  for (int j = 0; j < p.base.size(); ++j) {
    pts.push_back(p.base_vertex(j));
    ids.emplace_back(0, j);
  }
  for (int i = 0; i < p.top.size(); ++i) {
    pts.push_back(p.top_vertex(i));
    ids.emplace_back(1, i);
  }
  const int n = static_cast<int>(pts.size());
  double scale = 0.0;
  for (const Vec3& q : pts) scale = std::max(scale, q.cwiseAbs().maxCoeff());
  const double tol = eps * std::max(1.0, scale);

  std::set<FacetKey> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec3 nrm = (pts[b] - pts[a]).cross(pts[c] - pts[a]);
        if (nrm.norm() < 1e-12) continue;
        nrm.normalize();
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int q = 0; q < n; ++q) {
          const double d = nrm.dot(pts[q] - pts[a]);
          lo = std::min(lo, d);
          hi = std::max(hi, d);
        }
        if (hi > tol && lo < -tol) continue;  // not a supporting plane
        FacetKey key;
        for (int q = 0; q < n; ++q) {
          if (std::abs(nrm.dot(pts[q] - pts[a])) > tol) continue;
          (ids[q].first == 0 ? key.first : key.second).push_back(ids[q].second);
        }
        if (key.first.empty() || key.second.empty()) continue;  // base or top plane
        std::sort(key.first.begin(), key.first.end());
        std::sort(key.second.begin(), key.second.end());
        out.insert(std::move(key));
      }
  return out;
}

inline std::set<FacetKey> band_facet_keys(const Band& band, int ell, int m) {
  auto wrap = [](int i, int n) { return ((i % n) + n) % n; };
  std::set<FacetKey> out;
  for (const auto& f : band.facets) {
    FacetKey key;
    for (int a = 0; a < f.base_count; ++a) key.first.push_back(wrap(f.base_first + a, ell));
    for (int a = 0; a < f.top_count; ++a) key.second.push_back(wrap(f.top_first + a, m));
    std::sort(key.first.begin(), key.first.end());
    std::sort(key.second.begin(), key.second.end());
    out.insert(std::move(key));
  }
  return out;
}

// Distance from `start` sampled densely along the polyline; true iff the
// distance never decreases by more than eps between consecutive samples.
inline bool radially_monotone_sampled(const std::vector<Vec2>& path, const Vec2& start,
                                      int samples_per_edge = 1000, double eps = 1e-9) {
  if (path.size() < 2) return true;
  double last = (path.front() - start).norm();
  for (size_t e = 0; e + 1 < path.size(); ++e) {
    for (int s = 1; s <= samples_per_edge; ++s) {
      const double t = static_cast<double>(s) / samples_per_edge;
      const Vec2 q = path[e] + (path[e + 1] - path[e]) * t;
      const double d = (q - start).norm();
      if (d < last - eps) return false;
      last = d;
    }
  }
  return true;
}

// Angle at `apex` via the law of cosines (library uses atan2 of cross/dot).
inline double angle_via_acos(const Vec3& apex, const Vec3& a, const Vec3& b) {
  const double u = (a - apex).norm(), v = (b - apex).norm(), w = (a - b).norm();
  return std::acos(std::clamp((u * u + v * v - w * w) / (2 * u * v), -1.0, 1.0));
}

inline double angle_via_acos2(const Vec2& apex, const Vec2& a, const Vec2& b) {
  const double u = (a - apex).norm(), v = (b - apex).norm(), w = (a - b).norm();
  return std::acos(std::clamp((u * u + v * v - w * w) / (2 * u * v), -1.0, 1.0));
}

}  // namespace oracle
