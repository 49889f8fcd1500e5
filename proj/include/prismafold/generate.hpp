#pragma once

#include "prismafold/prismatoid.hpp"

#include <array>
#include <cstdint>
#include <random>

namespace prismafold {

/// Deterministic uniform double in [0, 1): top 53 bits of the engine output.
/// mt19937_64 has a fully specified output sequence, so generated instances
/// are identical across platforms and standard libraries.
double uniform01(std::mt19937_64& rng);
double uniform_in(std::mt19937_64& rng, double lo, double hi);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  // inclusive bounds

struct GenConfig {
  std::uint64_t seed = 0;
  int base_vertices = 6;
  int top_vertices = 4;
  bool prismoid_mode = false;
  std::array<double, 2> height_range = {0.2, 2.0};
  std::array<double, 2> shrink_range = {0.3, 0.7};
};

/// Random strictly convex CCW polygon with n vertices, bounding box
/// normalized to [-1,1]^2. Random-direction-sum construction: n random edge
/// vectors recentered to sum to zero, sorted by angle, prefix-summed.
std::vector<Vec2> random_convex_polygon(std::mt19937_64& rng, int n);

/// Random nested prismatoid: independent base and top shapes, the top scaled
/// and translated so every vertex stays strictly inside the base with margin
/// at least 0.02. Throws GenerationFailed after bounded retries and
/// InvalidArgument on a bad config.
Prismatoid gen_nested_prismatoid(const GenConfig& cfg);

/// Random nested prismoid: top is a homothety of the base about an interior
/// point with ratio drawn from shrink_range, so corresponding edges are
/// parallel and every lateral facet is a planar trapezoid.
Prismatoid gen_nested_prismoid(const GenConfig& cfg);

}  // namespace prismafold
