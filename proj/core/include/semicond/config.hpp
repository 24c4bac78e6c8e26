#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace semicond {

// Resource guards. Every cap is explicit configuration; when a guard trips
// the affected computation either throws BoundExceeded or returns a result
// flagged certified=false. Defaults are generous for desk-scale instances.
struct Caps {
    // Maximum number of box points enumerated when collecting zonotope
    // lattice points (the Hilbert-basis candidate set).
    std::int64_t zonotope_box_cap = 2'000'000;

    // Maximum queue expansions in the module-generator fixed-point closure.
    std::int64_t closure_iteration_cap = 200'000;

    // Maximum box volume for a single membership dynamic program.
    std::int64_t membership_box_cap = 50'000'000;

    // Maximum nodes visited by the certified minimal-generator search.
    std::int64_t certified_search_node_cap = 500'000;

    // Degree cap for fallback bounded scans (used only when the certified
    // search declines; results are then flagged uncertified).
    int scan_degree_cap = 24;

    // Power cap override for radical-membership tests; when absent the
    // per-call default 2*maxdeg(I) + dim is used.
    std::optional<int> power_cap;

    // Degree cap for the single-monomial decomposition witness search.
    int oneless_degree_cap = 6;

    // Default entry-degree cap for parameter-sequence enumeration.
    int sop_degree_cap = 6;

    // Degree bound for bounded seminormality scans.
    int seminormal_degree_cap = 12;
};

// Reads SEMICOND_DEGREE_CAP (if set and a positive integer) into
// scan_degree_cap; all other fields keep their defaults.
Caps caps_from_environment();

}  // namespace semicond
