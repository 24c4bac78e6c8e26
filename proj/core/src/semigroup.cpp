#include "semicond/semigroup.hpp"

#include "semicond/errors.hpp"

#include <algorithm>
#include <numeric>

namespace semicond {

AffineSemigroup::AffineSemigroup(std::size_t dim, std::vector<Vec> generators, Caps caps)
    : dim_(dim), caps_(caps), memo_(std::make_shared<Memo>()) {
    if (dim == 0) throw InvalidInput("AffineSemigroup: ambient dimension must be positive");
    if (generators.empty()) throw InvalidInput("AffineSemigroup: empty generator list");
    for (const Vec& g : generators) {
        if (g.size() != dim_)
            throw DimensionMismatch("AffineSemigroup: generator " + to_string(g) +
                                    " has wrong dimension");
        if (!is_nonnegative(g))
            throw InvalidInput("AffineSemigroup: negative coordinate in generator " + to_string(g));
        if (is_zero(g)) throw InvalidInput("AffineSemigroup: zero generator");
    }
    sort_deg_lex(generators);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    generators_ = std::move(generators);
    lattice_ = hermite_normal_form(generators_);
    memo_->table.emplace(zero_vec(dim_), true);
}

bool AffineSemigroup::contains(const Vec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("contains: vector dimension mismatch");
    if (!is_nonnegative(v))
        throw InvalidInput("contains: negative coordinate in " + to_string(v));
    return contains_inner(v);
}

bool AffineSemigroup::contains_clipped(const Vec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("contains_clipped: vector dimension mismatch");
    if (!is_nonnegative(v)) return false;
    return contains_inner(v);
}

bool AffineSemigroup::contains_inner(const Vec& v) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->table.find(v);
        if (it != memo_->table.end()) return it->second;
    }
    // Box guard: the recursion explores at most prod(v_i + 1) states.
    Int box = 1;
    for (const Int& c : v) box *= c + 1;
    if (box > caps_.membership_box_cap)
        throw BoundExceeded("membership_box", "membership box of " + box.str() + " points");

    bool result = false;
    for (const Vec& g : generators_) {
        bool fits = true;
        for (std::size_t k = 0; k < dim_; ++k)
            if (g[k] > v[k]) { fits = false; break; }
        if (!fits) continue;
        if (contains_inner(sub(v, g))) { result = true; break; }
    }
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->table.emplace(v, result);
    return result;
}

std::vector<Vec> AffineSemigroup::minimal_generators() const {
    std::vector<Vec> keep;
    for (const Vec& g : generators_) {
        bool reducible = false;
        for (const Vec& h : generators_) {
            if (h == g) continue;
            Vec diff(dim_);
            bool nonneg = true;
            for (std::size_t k = 0; k < dim_; ++k) {
                diff[k] = g[k] - h[k];
                if (diff[k] < 0) { nonneg = false; break; }
            }
            if (!nonneg || is_zero(diff)) continue;
            if (contains_inner(diff)) { reducible = true; break; }
        }
        if (!reducible) keep.push_back(g);
    }
    return keep;  // generators_ already deg-lex sorted
}

std::size_t AffineSemigroup::dimension() const { return lattice_.rank(); }

std::optional<std::vector<Vec>> AffineSemigroup::factorization(const Vec& v) const {
    if (!contains_clipped(v)) return std::nullopt;
    std::vector<Vec> parts;
    Vec rest = v;
    while (!is_zero(rest)) {
        bool advanced = false;
        for (const Vec& g : generators_) {
            bool fits = true;
            for (std::size_t k = 0; k < dim_; ++k)
                if (g[k] > rest[k]) { fits = false; break; }
            if (!fits) continue;
            if (contains_inner(sub(rest, g))) {
                parts.push_back(g);
                rest = sub(rest, g);
                advanced = true;
                break;
            }
        }
        if (!advanced) return std::nullopt;  // unreachable for members
    }
    return parts;
}

NumericalSemigroup::NumericalSemigroup(std::vector<Int> generators)
    : mutex_(std::make_shared<std::mutex>()) {
    if (generators.empty()) throw InvalidInput("NumericalSemigroup: empty generator list");
    for (const Int& g : generators)
        if (g <= 0) throw InvalidInput("NumericalSemigroup: generator " + g.str() + " <= 0");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    Int g = 0;
    for (const Int& x : generators) g = gcd_int(g, x);
    if (g != 1)
        throw InvalidInput("NumericalSemigroup: generators have gcd " + g.str() + ", expected 1");
    generators_ = std::move(generators);
    sieve_ = std::make_shared<std::vector<char>>(1, char(1));  // 0 is reachable
}

const std::vector<char>& NumericalSemigroup::sieve_up_to(std::int64_t limit) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto& s = *sieve_;
    if (static_cast<std::int64_t>(s.size()) > limit) return s;
    std::size_t old = s.size();
    s.resize(static_cast<std::size_t>(limit) + 1, char(0));
    // Ascending pass: entries below the current index are already final.
    for (std::size_t a = old; a < s.size(); ++a) {
        for (const Int& g : generators_) {
            std::size_t gi = static_cast<std::size_t>(to_int64(g));
            if (a >= gi && s[a - gi]) {
                s[a] = 1;
                break;
            }
        }
    }
    return s;
}

bool NumericalSemigroup::contains(const Int& a) const {
    if (a < 0) return false;
    const auto& s = sieve_up_to(to_int64(a));
    return s[static_cast<std::size_t>(to_int64(a))] != 0;
}

Int NumericalSemigroup::frobenius() const {
    if (generators_[0] == 1) return -1;
    // Start at the product of the two smallest generators and extend until a
    // run of min-generator consecutive members closes the sieve.
    std::int64_t g1 = to_int64(generators_[0]);
    std::int64_t g2 = generators_.size() > 1 ? to_int64(generators_[1]) : g1;
    std::int64_t limit = g1 * g2;
    while (true) {
        const auto& s = sieve_up_to(limit);
        std::int64_t run = 0;
        std::int64_t last_gap = -1;
        for (std::int64_t a = 0; a <= limit; ++a) {
            if (s[static_cast<std::size_t>(a)]) {
                ++run;
                if (run >= g1 && last_gap >= 0) return Int(last_gap);
                if (run >= g1 && last_gap < 0) return -1;
            } else {
                run = 0;
                last_gap = a;
            }
        }
        limit *= 2;
    }
}

std::vector<Int> NumericalSemigroup::gaps() const {
    Int f = frobenius();
    std::vector<Int> out;
    if (f < 0) return out;
    const auto& s = sieve_up_to(to_int64(f));
    for (std::int64_t a = 1; a <= to_int64(f); ++a)
        if (!s[static_cast<std::size_t>(a)]) out.push_back(Int(a));
    return out;
}

std::vector<Int> NumericalSemigroup::apery_set(const Int& n) const {
    if (n <= 0) throw InvalidInput("apery_set: n must be positive");
    if (!contains(n)) throw InvalidInput("apery_set: " + n.str() + " is not in the semigroup");
    Int f = frobenius();
    std::int64_t limit = to_int64(f < 0 ? n : f + n);
    const auto& s = sieve_up_to(limit);
    std::int64_t nn = to_int64(n);
    std::vector<Int> out(static_cast<std::size_t>(nn), Int(-1));
    for (std::int64_t a = 0; a <= limit; ++a) {
        if (!s[static_cast<std::size_t>(a)]) continue;
        auto r = static_cast<std::size_t>(a % nn);
        if (out[r] < 0) out[r] = Int(a);
    }
    return out;
}

bool NumericalSemigroup::is_symmetric() const {
    Int f = frobenius();
    if (f < 0) return true;
    const auto& s = sieve_up_to(to_int64(f));
    for (std::int64_t a = 0; a <= to_int64(f); ++a) {
        bool in_a = s[static_cast<std::size_t>(a)] != 0;
        bool in_b = s[static_cast<std::size_t>(to_int64(f) - a)] != 0;
        if (in_a == in_b) return false;
    }
    return true;
}

AffineSemigroup NumericalSemigroup::to_affine(Caps caps) const {
    std::vector<Vec> gens;
    gens.reserve(generators_.size());
    for (const Int& g : generators_) gens.push_back(Vec{g});
    return AffineSemigroup(1, std::move(gens), caps);
}

NumericalSemigroup numerical_from_affine(const AffineSemigroup& S) {
    if (S.ambient_dim() != 1)
        throw InvalidInput("numerical_from_affine: ambient dimension must be 1");
    std::vector<Int> gens;
    Int g = 0;
    for (const Vec& v : S.generators()) {
        gens.push_back(v[0]);
        g = gcd_int(g, v[0]);
    }
    for (Int& x : gens) x /= g;
    return NumericalSemigroup(std::move(gens));
}

std::vector<Vec> box_points_up_to_degree(std::size_t dim, const Int& bound) {
    std::vector<Vec> out;
    if (bound < 0) return out;
    Vec cur = zero_vec(dim);
    // Enumerate the simplex by odometer, then sort canonically.
    while (true) {
        if (degree(cur) <= bound) out.push_back(cur);
        std::size_t k = 0;
        while (k < dim) {
            cur[k] += 1;
            if (degree(cur) <= bound) break;
            cur[k] = 0;
            ++k;
        }
        if (k == dim) break;
    }
    sort_deg_lex(out);
    return out;
}

}  // namespace semicond
