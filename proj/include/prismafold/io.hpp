#pragma once

#include "prismafold/unfold.hpp"

#include <string>
#include <utility>

namespace prismafold {

/// Instance file (UTF-8 JSON):
///   {"format":"prismatoid/1","base":[[x,y],...],"top":[[x,y],...],"height":h}
/// Parsing runs the full validate() contract; serialization writes 17
/// significant digits, so a round-trip reproduces every double bit for bit.
Prismatoid parse_instance(const std::string& text, const Tolerances& tol = {});
std::string serialize_instance(const Prismatoid& p);

/// Net file (UTF-8 JSON):
///   {"format":"net/1","facets":[{"id","patch","points"}...],
///    "attach_tree":[{"a","b","edge"}...],"cut_edges":[...],"plan":{...}}
/// The file stores coordinates and the cut plan. Vertex labels and the cone
/// frame are not stored: parse_net rebuilds them from the instance's band,
/// validating the plan's arcs and cut edges against it along the way.
std::string serialize_net(const Net& net, const CutPlan& plan);
std::pair<Net, CutPlan> parse_net(const std::string& text, const Prismatoid& p, const Band& band,
                                  const Tolerances& tol = {});

/// Standalone SVG: one filled polygon per placed facet colored by patch,
/// hinge edges solid, cut edges dashed, viewBox = bounding box + 5% margin.
/// Deterministic byte for byte for a fixed net.
std::string render_svg(const Net& net);

}  // namespace prismafold
