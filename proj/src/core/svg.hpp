#pragma once

#include <string>

#include "embed.hpp"

namespace saddle {

// Deterministic SVG 1.1 figure: the input graph in a light stroke and the
// deformed graph at eps in a dark stroke; rays clipped to the viewport, 20%
// bounding-box padding. Non-rigid graphs render the limit graph only, with an
// annotation.
std::string render_svg(const Configuration& config, double eps);

}  // namespace saddle
