#include "prismafold/generate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace prismafold {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  const int span = hi - lo + 1;
  int v = lo + static_cast<int>(uniform01(rng) * span);
  return std::min(v, hi);
}

namespace {

constexpr double kNestingMargin = 0.02;
constexpr int kMaxAttempts = 64;

void check_config(const GenConfig& cfg) {
  if (cfg.base_vertices < 3 || cfg.top_vertices < 3)
    throw Error(ErrorCode::InvalidArgument, "GenConfig: vertex counts must be >= 3");
  if (!(cfg.height_range[0] > 0) || !(cfg.height_range[0] <= cfg.height_range[1]))
    throw Error(ErrorCode::InvalidArgument, "GenConfig: height_range must be positive and ordered");
  if (!(cfg.shrink_range[0] > 0) || !(cfg.shrink_range[1] < 1) ||
      !(cfg.shrink_range[0] <= cfg.shrink_range[1]))
    throw Error(ErrorCode::InvalidArgument, "GenConfig: shrink_range must lie inside (0,1)");
}

// Affine-map the polygon's bounding box onto [-1,1]^2 (convexity preserved).
void normalize_bbox(std::vector<Vec2>& poly) {
  Vec2 lo(std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity());
  Vec2 hi = -lo;
  for (const Vec2& p : poly) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  const Vec2 span = hi - lo;
  for (Vec2& p : poly) {
    p.x() = 2.0 * (p.x() - lo.x()) / span.x() - 1.0;
    p.y() = 2.0 * (p.y() - lo.y()) / span.y() - 1.0;
  }
}

// Largest ratio s such that c + s * d clears every base edge by `margin`,
// over all offset vectors d.
double max_scale_inside(const std::vector<Vec2>& base, const Vec2& c,
                        const std::vector<Vec2>& offsets, double margin) {
  double s_max = std::numeric_limits<double>::infinity();
  const size_t n = base.size();
  for (size_t e = 0; e < n; ++e) {
    const Vec2 a = base[e];
    const Vec2 edge = base[(e + 1) % n] - a;
    const Vec2 n_out = Vec2(edge.y(), -edge.x()).normalized();
    const double room = -n_out.dot(c - a) - margin;  // inner clearance of c minus margin
    if (room <= 0) return 0.0;
    for (const Vec2& d : offsets) {
      const double push = n_out.dot(d);  // outward rate along this normal
      if (push > 0) s_max = std::min(s_max, room / push);
    }
  }
  return s_max;
}

Vec2 random_interior_point(std::mt19937_64& rng, const std::vector<Vec2>& base, double margin) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Vec2 c(uniform_in(rng, -1, 1), uniform_in(rng, -1, 1));
    if (convex_inner_distance(c, base) > 2 * margin) return c;
  }
  // Fall back to the vertex centroid, always strictly interior.
  Vec2 c = Vec2::Zero();
  for (const Vec2& p : base) c += p;
  return c / static_cast<double>(base.size());
}

}  // namespace

std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng, int n) {
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vec2> dirs(n);
    Vec2 mean = Vec2::Zero();
    for (Vec2& d : dirs) {
      d = Vec2(uniform_in(rng, -1, 1), uniform_in(rng, -1, 1));
      mean += d;
    }
    mean /= n;
    for (Vec2& d : dirs) d -= mean;  // edges now sum to zero
    std::sort(dirs.begin(), dirs.end(), [](const Vec2& a, const Vec2& b) {
      return std::atan2(a.y(), a.x()) < std::atan2(b.y(), b.x());
    });
    std::vector<Vec2> poly(n);
    Vec2 acc = Vec2::Zero();
    for (int i = 0; i < n; ++i) {
      poly[i] = acc;
      acc += dirs[i];
    }
    normalize_bbox(poly);
    if (is_strictly_convex_ccw(poly)) return poly;
  }
  throw Error(ErrorCode::GenerationFailed, "random_convex_polygon: no generic polygon after " +
                                               std::to_string(kMaxAttempts) + " attempts");
}

Prismatoid gen_nested_prismatoid(const GenConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vec2> base = random_convex_polygon(rng, cfg.base_vertices);
    std::vector<Vec2> shape = random_convex_polygon(rng, cfg.top_vertices);
    const Vec2 c = random_interior_point(rng, base, kNestingMargin);
    Vec2 centroid = Vec2::Zero();
    for (const Vec2& p : shape) centroid += p;
    centroid /= cfg.top_vertices;
    std::vector<Vec2> offsets(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) offsets[i] = shape[i] - centroid;

    const double s_max = max_scale_inside(base, c, offsets, kNestingMargin);
    if (!(s_max > 0)) continue;
    const double s = s_max * uniform_in(rng, cfg.shrink_range[0], cfg.shrink_range[1]);
    std::vector<Vec2> top(shape.size());
    for (size_t i = 0; i < shape.size(); ++i) top[i] = c + s * offsets[i];
    const double h = uniform_in(rng, cfg.height_range[0], cfg.height_range[1]);
    try {
      return validate(std::move(base), std::move(top), h);
    } catch (const Error&) {
      continue;  // near-degenerate scaling artifact: redraw
    }
  }
  throw Error(ErrorCode::GenerationFailed,
              "gen_nested_prismatoid: seed " + std::to_string(cfg.seed));
}

Prismatoid gen_nested_prismoid(const GenConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Vec2> base = random_convex_polygon(rng, cfg.base_vertices);
    const Vec2 c = random_interior_point(rng, base, kNestingMargin);
    std::vector<Vec2> offsets(base.size());
    for (size_t i = 0; i < base.size(); ++i) offsets[i] = base[i] - c;

    const double ratio = uniform_in(rng, cfg.shrink_range[0], cfg.shrink_range[1]);
    if (max_scale_inside(base, c, offsets, kNestingMargin) < ratio) continue;
    std::vector<Vec2> top(base.size());
    for (size_t i = 0; i < base.size(); ++i) top[i] = c + ratio * offsets[i];
    const double h = uniform_in(rng, cfg.height_range[0], cfg.height_range[1]);
    try {
      return validate(std::move(base), std::move(top), h);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::GenerationFailed,
              "gen_nested_prismoid: seed " + std::to_string(cfg.seed));
}

}  // namespace prismafold
