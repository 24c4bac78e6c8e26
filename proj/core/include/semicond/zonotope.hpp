#pragma once

#include "semicond/config.hpp"
#include "semicond/vec.hpp"

#include <vector>

namespace semicond {

// All integer points of { sum_i lambda_i * rays_i : 0 <= lambda_i <= 1 },
// found by exact bounding-box enumeration with per-point rational
// feasibility. Intended for the extreme rays of a pointed cone (the
// Hilbert-basis candidate region). Output is deg-lex sorted and always
// contains the origin. Throws BoundExceeded when the bounding box has more
// than caps.zonotope_box_cap integer points.
std::vector<Vec> zonotope_lattice_points(const std::vector<Vec>& rays, const Caps& caps = {});

}  // namespace semicond
