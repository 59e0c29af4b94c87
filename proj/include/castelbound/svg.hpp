// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "castelbound/tiltwalls.hpp"

namespace castelbound::svg {

struct wall_entry {
    tiltwalls::wall_geometry wall;
    std::string label;
};

/// Renders a wall diagram for the class (1, 0, -d/n): wall arcs, the b_d
/// marker, the shaded neutrality window up to the highest wall, and the
/// Re Z = 0 hyperbola. Geometry stays exact until this call; floats are
/// used for coordinates only.
std::string wall_diagram(long long d, long long n, const std::vector<wall_entry>& walls);

} // namespace castelbound::svg
