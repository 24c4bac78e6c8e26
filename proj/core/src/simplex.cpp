#include "semicond/simplex.hpp"

#include "semicond/errors.hpp"

#include <cassert>
#include <vector>

namespace semicond {

namespace {

// Phase-1 simplex on { x >= 0 : A x = b }: minimizes the sum of artificial
// variables; the system is feasible iff the optimum is zero. Bland's rule
// throughout, exact rational pivots.
bool phase1_feasible(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (m == 0) return true;

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (Rat& c : a[i]) c = -c;
        }
    }

    const std::size_t total = n + m;  // structural + artificial
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(total + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
    }
    std::vector<Rat> obj(total + 1, Rat(0));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) obj[j] -= t[i][j];
    for (std::size_t i = 0; i < m; ++i) obj[total] -= t[i][total];

    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter == total) break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            if (leave == m) { leave = i; continue; }
            Rat cur = t[i][total] / t[i][enter];
            Rat best = t[leave][total] / t[leave][enter];
            if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
        }
        // The phase-1 objective is bounded below by zero, so an entering
        // column always has a positive pivot entry.
        assert(leave != m);

        Rat pivot = t[leave][enter];
        for (Rat& c : t[leave]) c /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[total] == 0;
}

}  // namespace

bool unit_box_combination_exists(const std::vector<Vec>& columns, const Vec& target) {
    const std::size_t k = columns.size();
    const std::size_t d = target.size();
    for (const Vec& c : columns) require_same_dim(c, target);
    // Variables: lambda_1..k and slack_1..k with lambda_i + slack_i = 1.
    std::vector<std::vector<Rat>> a(d + k, std::vector<Rat>(2 * k, Rat(0)));
    std::vector<Rat> b(d + k, Rat(0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = Rat(columns[j][r]);
        b[r] = Rat(target[r]);
    }
    for (std::size_t j = 0; j < k; ++j) {
        a[d + j][j] = 1;
        a[d + j][k + j] = 1;
        b[d + j] = 1;
    }
    return phase1_feasible(std::move(a), std::move(b));
}

bool nonneg_combination_exists(const std::vector<Vec>& columns, const Vec& target) {
    const std::size_t k = columns.size();
    const std::size_t d = target.size();
    for (const Vec& c : columns) require_same_dim(c, target);
    std::vector<std::vector<Rat>> a(d, std::vector<Rat>(k, Rat(0)));
    std::vector<Rat> b(d, Rat(0));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t j = 0; j < k; ++j) a[r][j] = Rat(columns[j][r]);
        b[r] = Rat(target[r]);
    }
    return phase1_feasible(std::move(a), std::move(b));
}

}  // namespace semicond
