#pragma once

// Shared hand-built instances. Numbers are frozen from closed forms noted
// beside each fixture.

#include "prismafold/prismatoid.hpp"

#include <vector>

namespace fixtures {

using prismafold::Prismatoid;
using prismafold::Vec2;

// Square frustum: base [-1,1]^2, top scaled by 0.5, height 1. All four
// lateral facets are congruent trapezoids.
inline Prismatoid unit_frustum() {
  return prismafold::validate(
      {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}},
      {{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}}, 1.0);
}

// Regular pentagon (R = 2, first vertex at angle pi/2) under a small
// triangle (R = 0.5, rotated 0.3 rad). Band is 8 triangles.
inline Prismatoid pentagon_triangle() {
  return prismafold::validate(
      {{1.2246467991473532e-16, 2.0},
       {-1.9021130325903071, 0.61803398874989501},
       {-1.1755705045849465, -1.6180339887498947},
       {1.1755705045849458, -1.6180339887498951},
       {1.9021130325903073, 0.61803398874989435}},
      {{-0.14776010333066977, 0.47766824456280299},
       {-0.33979278270717056, -0.36679812543157519},
       {0.48755288603784031, -0.11087011913122817}},
      1.0);
}

// Square base, rectangular top with unequal shrink per axis. Still a
// prismoid (edges pairwise parallel, lateral quads planar) but not a
// homothety of the base.
inline Prismatoid square_rect_prismoid() {
  return prismafold::validate(
      {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}},
      {{-0.5, -0.25}, {0.5, -0.25}, {0.5, 0.25}, {-0.5, 0.25}}, 1.0);
}

// Square base with a 45-degree rotated square top (top vertices on the
// axes): antiprism-like band of 8 triangles.
inline Prismatoid twisted_square() {
  const double r = 0.4;
  return prismafold::validate(
      {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}},
      {{r, 0}, {0, r}, {-r, 0}, {0, -r}}, 1.0);
}

}  // namespace fixtures
