#include "semicond/zonotope.hpp"

#include "semicond/errors.hpp"
#include "semicond/simplex.hpp"

namespace semicond {

std::vector<Vec> zonotope_lattice_points(const std::vector<Vec>& rays, const Caps& caps) {
    if (rays.empty()) throw InvalidInput("zonotope_lattice_points: empty ray list");
    const std::size_t d = rays[0].size();
    for (const Vec& r : rays) {
        if (r.size() != d) throw DimensionMismatch("zonotope_lattice_points: ragged rays");
        if (is_zero(r)) throw InvalidInput("zonotope_lattice_points: zero ray");
    }

    Vec lo = zero_vec(d), hi = zero_vec(d);
    for (const Vec& r : rays)
        for (std::size_t k = 0; k < d; ++k) {
            if (r[k] < 0) lo[k] += r[k];
            if (r[k] > 0) hi[k] += r[k];
        }

    Int volume = 1;
    for (std::size_t k = 0; k < d; ++k) {
        volume *= hi[k] - lo[k] + 1;
        if (volume > caps.zonotope_box_cap)
            throw BoundExceeded("zonotope_box",
                                "bounding box of " + volume.str() + "+ points exceeds cap");
    }

    std::vector<Vec> points;
    Vec cursor = lo;
    while (true) {
        if (unit_box_combination_exists(rays, cursor)) points.push_back(cursor);
        std::size_t k = 0;
        while (k < d) {
            cursor[k] += 1;
            if (cursor[k] <= hi[k]) break;
            cursor[k] = lo[k];
            ++k;
        }
        if (k == d) break;
    }
    sort_deg_lex(points);
    return points;
}

}  // namespace semicond
