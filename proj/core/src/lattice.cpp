#include "semicond/lattice.hpp"

#include "semicond/errors.hpp"

#include <algorithm>
#include <utility>

namespace semicond {

namespace {

struct HnfResult {
    std::vector<Vec> h;          // reduced rows, zero rows at the bottom
    std::vector<Vec> transform;  // unimodular U with U * M = h
    std::size_t rank = 0;
};

void axpy_row(Vec& target, const Int& q, const Vec& source) {
    for (std::size_t k = 0; k < target.size(); ++k) target[k] -= q * source[k];
}

void negate_row(Vec& row) {
    for (Int& c : row) c = -c;
}

HnfResult hnf_with_transform(std::vector<Vec> m) {
    const std::size_t n = m.size();
    const std::size_t d = n == 0 ? 0 : m[0].size();
    HnfResult res;
    res.transform.assign(n, Vec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) res.transform[i][i] = 1;

    std::size_t r = 0;
    for (std::size_t col = 0; col < d && r < n; ++col) {
        // Gcd elimination within the column below the current pivot row.
        while (true) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i) {
                if (m[i][col] == 0) continue;
                if (best == n || abs_int(m[i][col]) < abs_int(m[best][col])) best = i;
            }
            if (best == n) break;
            std::swap(m[best], m[r]);
            std::swap(res.transform[best], res.transform[r]);
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (m[i][col] == 0) continue;
                Int q = m[i][col] / m[r][col];  // truncated quotient shrinks |entry|
                if (q != 0) {
                    axpy_row(m[i], q, m[r]);
                    axpy_row(res.transform[i], q, res.transform[r]);
                }
                if (m[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (m[r][col] == 0) continue;
        if (m[r][col] < 0) {
            negate_row(m[r]);
            negate_row(res.transform[r]);
        }
        // Reduce the entries above the pivot into [0, pivot).
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(m[i][col], m[r][col]);
            if (q != 0) {
                axpy_row(m[i], q, m[r]);
                axpy_row(res.transform[i], q, res.transform[r]);
            }
        }
        ++r;
    }
    res.rank = r;
    res.h = std::move(m);
    return res;
}

std::size_t pivot_column(const Vec& row) {
    for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) return j;
    return row.size();
}

}  // namespace

IntegerLattice hermite_normal_form(const std::vector<Vec>& rows) {
    if (rows.empty()) throw InvalidInput("hermite_normal_form: empty generator list");
    const std::size_t d = rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != d) throw DimensionMismatch("hermite_normal_form: ragged rows");
    HnfResult res = hnf_with_transform(rows);
    IntegerLattice L;
    L.ambient_dim = d;
    L.basis.assign(res.h.begin(), res.h.begin() + static_cast<std::ptrdiff_t>(res.rank));
    return L;
}

HermiteWithTransform hermite_with_transform(const std::vector<Vec>& rows) {
    if (rows.empty()) throw InvalidInput("hermite_with_transform: empty generator list");
    const std::size_t d = rows[0].size();
    for (const Vec& r : rows)
        if (r.size() != d) throw DimensionMismatch("hermite_with_transform: ragged rows");
    HnfResult res = hnf_with_transform(rows);
    HermiteWithTransform out;
    out.lattice.ambient_dim = d;
    out.lattice.basis.assign(res.h.begin(), res.h.begin() + static_cast<std::ptrdiff_t>(res.rank));
    out.basis_coeffs.assign(res.transform.begin(),
                            res.transform.begin() + static_cast<std::ptrdiff_t>(res.rank));
    return out;
}

std::optional<std::vector<Int>> lattice_solve(const IntegerLattice& L, const Vec& v) {
    if (v.size() != L.ambient_dim)
        throw DimensionMismatch("lattice_solve: vector dimension " + std::to_string(v.size()));
    Vec w = v;
    std::vector<Int> coeffs(L.rank(), Int(0));
    for (std::size_t i = 0; i < L.basis.size(); ++i) {
        std::size_t p = pivot_column(L.basis[i]);
        if (w[p] == 0) continue;
        if (w[p] % L.basis[i][p] != 0) return std::nullopt;
        Int c = w[p] / L.basis[i][p];
        coeffs[i] = c;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * L.basis[i][k];
    }
    if (!is_zero(w)) return std::nullopt;
    return coeffs;
}

bool lattice_contains(const IntegerLattice& L, const Vec& v) {
    return lattice_solve(L, v).has_value();
}

std::vector<Vec> integer_row_kernel(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    HnfResult res = hnf_with_transform(rows);
    std::vector<Vec> kernel(res.transform.begin() + static_cast<std::ptrdiff_t>(res.rank),
                            res.transform.end());
    if (kernel.empty()) return {};
    return hermite_normal_form(kernel).basis;
}

std::size_t matrix_rank(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    return hnf_with_transform(rows).rank;
}

std::vector<Vec> transpose(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    std::vector<Vec> t(rows[0].size(), Vec(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) t[j][i] = rows[i][j];
    return t;
}

std::vector<Vec> integer_column_kernel(const std::vector<Vec>& rows) {
    return integer_row_kernel(transpose(rows));
}

IntegerLattice lattice_meet_kernel(const IntegerLattice& L, const std::vector<Vec>& forms) {
    if (forms.empty()) return L;
    // Coefficient rows: entry (j, k) = <basis_j, form_k>.
    std::vector<Vec> coeff(L.rank());
    for (std::size_t j = 0; j < L.rank(); ++j) {
        coeff[j].resize(forms.size());
        for (std::size_t k = 0; k < forms.size(); ++k) coeff[j][k] = dot(L.basis[j], forms[k]);
    }
    std::vector<Vec> kernel = integer_row_kernel(coeff);
    IntegerLattice out;
    out.ambient_dim = L.ambient_dim;
    if (kernel.empty()) return out;
    std::vector<Vec> gens;
    gens.reserve(kernel.size());
    for (const Vec& c : kernel) {
        Vec g = zero_vec(L.ambient_dim);
        for (std::size_t j = 0; j < L.rank(); ++j)
            for (std::size_t k = 0; k < g.size(); ++k) g[k] += c[j] * L.basis[j][k];
        gens.push_back(std::move(g));
    }
    return hermite_normal_form(gens);
}

Vec lattice_primitive_on_ray(const IntegerLattice& L, const Vec& direction) {
    if (is_zero(direction)) throw InvalidInput("lattice_primitive_on_ray: zero direction");
    Vec p = primitive(direction);
    // Solve p = sum c_i * basis_i over the rationals; the lcm of the
    // denominators is exactly the least k with k*p in L (coefficients are
    // unique, so k*p in L iff k clears every denominator).
    std::vector<Rat> w(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) w[k] = Rat(p[k]);
    Int denom_lcm = 1;
    for (std::size_t i = 0; i < L.basis.size(); ++i) {
        std::size_t pc = pivot_column(L.basis[i]);
        if (w[pc] == 0) continue;
        Rat c = w[pc] / Rat(L.basis[i][pc]);
        Int den = denominator(c);
        denom_lcm = denom_lcm / gcd_int(denom_lcm, den) * den;
        for (std::size_t k = 0; k < w.size(); ++k) w[k] -= c * Rat(L.basis[i][k]);
    }
    for (const Rat& c : w)
        if (c != 0) throw InvalidInput("lattice_primitive_on_ray: direction outside span");
    return scale(denom_lcm, p);
}

LatticeQuotient lattice_quotient(const IntegerLattice& U, const IntegerLattice& G,
                                 std::int64_t enumeration_cap) {
    if (U.ambient_dim != G.ambient_dim)
        throw DimensionMismatch("lattice_quotient: ambient dimensions differ");
    if (U.rank() != G.rank())
        throw InvalidInput("lattice_quotient: sublattice rank differs (not finite index)");
    const std::size_t r = U.rank();
    // Express G's basis in U-coordinates.
    std::vector<Vec> a(r);
    for (std::size_t i = 0; i < r; ++i) {
        auto coeffs = lattice_solve(U, G.basis[i]);
        if (!coeffs) throw InvalidInput("lattice_quotient: G is not a sublattice of U");
        a[i] = *coeffs;
    }
    // Diagonalize a by row and column operations, tracking the inverse of the
    // accumulated column transform (row ops need no tracking for cosets).
    std::vector<Vec> vinv(r, Vec(r, Int(0)));
    for (std::size_t i = 0; i < r; ++i) vinv[i][i] = 1;

    auto col_axpy = [&](std::size_t dst, const Int& q, std::size_t src) {
        // column dst -= q * column src; inverse transform: row src += q * row dst
        for (std::size_t i = 0; i < r; ++i) a[i][dst] -= q * a[i][src];
        for (std::size_t k = 0; k < r; ++k) vinv[src][k] += q * vinv[dst][k];
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t t = 0; t < r; ++t) std::swap(a[t][i], a[t][j]);
        std::swap(vinv[i], vinv[j]);
    };
    auto col_negate = [&](std::size_t j) {
        for (std::size_t t = 0; t < r; ++t) a[t][j] = -a[t][j];
        negate_row(vinv[j]);
    };

    for (std::size_t t = 0; t < r; ++t) {
        while (true) {
            std::size_t bi = r, bj = r;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < r; ++j)
                    if (a[i][j] != 0 && (bi == r || abs_int(a[i][j]) < abs_int(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == r) throw InvalidInput("lattice_quotient: singular relation matrix");
            std::swap(a[bi], a[t]);
            if (bj != t) col_swap(bj, t);
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a[i][t] == 0) continue;
                Int q = a[i][t] / a[t][t];
                if (q != 0) axpy_row(a[i], q, a[t]);
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < r; ++j) {
                if (a[t][j] == 0) continue;
                Int q = a[t][j] / a[t][t];
                if (q != 0) col_axpy(j, q, t);
                if (a[t][j] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[t][t] < 0) col_negate(t);
    }

    LatticeQuotient out;
    out.index = 1;
    for (std::size_t t = 0; t < r; ++t) out.index *= a[t][t];
    if (out.index > enumeration_cap)
        throw BoundExceeded("lattice_quotient",
                            "quotient index " + out.index.str() + " exceeds enumeration cap");

    // Enumerate digit tuples w (0 <= w_t < d_t); the ambient representative is
    // (w * Vinv) * basis(U).
    std::vector<Int> digits(r, Int(0));
    while (true) {
        Vec u_coords(r, Int(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < r; ++k) u_coords[k] += digits[i] * vinv[i][k];
        Vec rep = zero_vec(U.ambient_dim);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t c = 0; c < U.ambient_dim; ++c) rep[c] += u_coords[k] * U.basis[k][c];
        out.representatives.push_back(std::move(rep));
        std::size_t t = 0;
        while (t < r) {
            digits[t] += 1;
            if (digits[t] < a[t][t]) break;
            digits[t] = 0;
            ++t;
        }
        if (t == r) break;
    }
    return out;
}

}  // namespace semicond
