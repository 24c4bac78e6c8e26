#pragma once

#include "semicond/vec.hpp"

#include <vector>

namespace semicond {

// Exact feasibility of { lambda : sum_i lambda_i * columns_i = target,
// 0 <= lambda_i <= 1 }, decided by phase-1 simplex over the rationals with
// Bland's rule (no cycling, no floating point).
bool unit_box_combination_exists(const std::vector<Vec>& columns, const Vec& target);

// Exact feasibility of { lambda >= 0 : sum_i lambda_i * columns_i = target }.
bool nonneg_combination_exists(const std::vector<Vec>& columns, const Vec& target);

}  // namespace semicond
