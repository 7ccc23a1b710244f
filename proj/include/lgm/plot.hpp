#pragma once

#include <string>
#include <vector>

#include "lgm/solver.hpp"

namespace lgm {

// Renders a critical set as a standalone SVG document with one scatter
// panel per coordinate: Re on the horizontal axis, Im on the vertical,
// both axes drawn through the origin. Point i keeps the same color in
// every panel and is annotated with labels[i], or with its index when
// labels is empty. Throws Error when labels is nonempty but its size
// differs from the number of points.
std::string critset_svg(const CritSet& cs,
                        const std::vector<std::string>& labels = {});

}  // namespace lgm
