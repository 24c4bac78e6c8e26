#include "semicond/minelements.hpp"

#include "semicond/conductor.hpp"
#include "semicond/cone.hpp"
#include "semicond/errors.hpp"
#include "semicond/normalization.hpp"
#include "semicond/semigroup.hpp"
#include "semicond/zonotope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semicond {

namespace {

void spend(EngineBudget& budget, std::int64_t amount) {
    budget.remaining -= amount;
    if (budget.remaining < 0)
        throw BoundExceeded("engine_budget", "certified search budget exhausted");
}

Int floor_rat(const Rat& q) { return floor_div(numerator(q), denominator(q)); }
Int ceil_rat(const Rat& q) { return ceil_div(numerator(q), denominator(q)); }

struct Node {
    const TranslateSystem* sys;
    AffineSemigroup phi;
    SaturationResult sat;  // saturation data of phi

    Node(const TranslateSystem& s)
        : sys(&s), phi(s.universe.ambient_dim, s.phi_gens), sat(saturate(phi)) {}

    bool universe_sat_contains(const Vec& x) const {
        return cone_contains(sat.cone, x) && lattice_contains(sys->universe, x);
    }

    bool in_set(const Vec& x) const {
        for (const TranslateRow& row : sys->rows) {
            bool ok = false;
            for (const Vec& delta : row.deltas)
                if (phi.contains_clipped(sub(x, delta))) { ok = true; break; }
            if (!ok) return false;
        }
        return true;
    }
};

// Hilbert basis of lattice ∩ cone given the lattice-primitive extreme rays
// and a cone membership test: zonotope candidates filtered to irreducibles.
std::vector<Vec> hilbert_basis_points(const std::vector<Vec>& rays_l, const IntegerLattice& L,
                                      const RationalCone& cone, const Vec& face_normal,
                                      EngineBudget& budget) {
    if (rays_l.empty()) return {};
    auto member = [&](const Vec& v) {
        return cone_contains(cone, v) && dot(face_normal, v) == 0 && lattice_contains(L, v);
    };
    std::vector<Vec> candidates;
    Caps caps;
    for (const Vec& p : zonotope_lattice_points(rays_l, caps)) {
        spend(budget, 1);
        if (!is_zero(p) && lattice_contains(L, p)) candidates.push_back(p);
    }
    std::vector<Vec> basis;
    for (const Vec& x : candidates) {
        bool reducible = false;
        for (const Vec& y : candidates) {
            if (y == x) continue;
            Vec diff = sub(x, y);
            if (!is_zero(diff) && member(diff)) { reducible = true; break; }
        }
        if (!reducible) basis.push_back(x);
    }
    sort_deg_lex(basis);
    return basis;
}

// Distinct sums of multisets of `gens` whose facet values add to exactly
// `target` under `normal`. Every gen must have a positive facet value.
std::vector<Vec> level_sums(const std::vector<Vec>& gens, const Vec& normal, const Int& target,
                            EngineBudget& budget) {
    std::vector<std::set<Vec>> dp(static_cast<std::size_t>(to_int64(target)) + 1);
    dp[0].insert(zero_vec(normal.size()));
    for (const Vec& g : gens) {
        std::int64_t w = to_int64(dot(normal, g));
        for (std::int64_t lvl = w; lvl < static_cast<std::int64_t>(dp.size()); ++lvl) {
            for (const Vec& s : dp[static_cast<std::size_t>(lvl - w)]) {
                spend(budget, 1);
                dp[static_cast<std::size_t>(lvl)].insert(add(s, g));
            }
        }
    }
    const auto& last = dp.back();
    return std::vector<Vec>(last.begin(), last.end());
}

// Minimal points of { x in universe ∩ cone : facet.x = level } as a module
// over the face lattice points. When the face is {0} this is every slice
// point (the slice is a polytope).
std::vector<Vec> slice_generators(const Node& node, std::size_t facet_idx, const Int& level,
                                  EngineBudget& budget) {
    const RationalCone& cone = node.sat.cone;
    const Vec& normal = cone.facets[facet_idx];
    const std::size_t d = cone.ambient_dim;

    std::vector<Vec> face_rays;
    std::vector<std::pair<Vec, Int>> off_rays;  // ray with its facet value
    for (const Vec& ray : cone.rays) {
        Int value = dot(normal, ray);
        if (value == 0)
            face_rays.push_back(lattice_primitive_on_ray(node.sys->universe, ray));
        else
            off_rays.emplace_back(ray, value);
    }

    // Bounding box: vertex hull of the slice polyhedron plus the zonotope of
    // the face rays (minimal module elements cannot exceed one ray step).
    std::vector<std::vector<Rat>> vertices;
    if (level == 0) {
        vertices.emplace_back(d, Rat(0));
    } else {
        for (const auto& [ray, value] : off_rays) {
            std::vector<Rat> v(d);
            for (std::size_t k = 0; k < d; ++k) v[k] = Rat(level * ray[k], value);
            vertices.push_back(std::move(v));
        }
    }
    Vec lo(d), hi(d);
    for (std::size_t k = 0; k < d; ++k) {
        Rat mn = vertices[0][k], mx = vertices[0][k];
        for (const auto& v : vertices) {
            mn = std::min(mn, v[k]);
            mx = std::max(mx, v[k]);
        }
        lo[k] = floor_rat(mn);
        hi[k] = ceil_rat(mx);
        for (const Vec& s : face_rays) hi[k] += s[k];  // rays lie in N^d
    }

    std::vector<Vec> slice_points;
    Vec cursor = lo;
    while (true) {
        spend(budget, 1);
        if (dot(normal, cursor) == level && cone_contains(cone, cursor) &&
            lattice_contains(node.sys->universe, cursor))
            slice_points.push_back(cursor);
        std::size_t k = 0;
        while (k < d) {
            cursor[k] += 1;
            if (cursor[k] <= hi[k]) break;
            cursor[k] = lo[k];
            ++k;
        }
        if (k == d) break;
    }
    sort_deg_lex(slice_points);
    if (face_rays.empty()) return slice_points;

    std::vector<Vec> face_hb =
        hilbert_basis_points(face_rays, node.sys->universe, cone, normal, budget);
    std::vector<Vec> minimal;
    for (const Vec& x : slice_points) {
        bool reducible = false;
        for (const Vec& h : face_hb) {
            Vec y = sub(x, h);
            if (cone_contains(cone, y) && lattice_contains(node.sys->universe, y)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) minimal.push_back(x);
    }
    return minimal;
}

std::vector<Vec> solve(const TranslateSystem& sys, EngineBudget& budget);

// Translate the rows onto the slice v + face, where membership x - delta in
// phi becomes a union over the level decomposition of phi.
std::optional<std::vector<TranslateRow>> translate_rows(const Node& node, const Vec& normal,
                                                        const std::vector<Vec>& face_gens,
                                                        const Vec& v, EngineBudget& budget) {
    std::vector<Vec> off_gens;
    for (const Vec& g : node.phi.generators())
        if (dot(normal, g) != 0) off_gens.push_back(g);

    std::vector<TranslateRow> out;
    for (const TranslateRow& row : node.sys->rows) {
        TranslateRow nrow;
        std::set<Vec> seen;
        for (const Vec& delta : row.deltas) {
            Int t = dot(normal, sub(v, delta));
            if (t < 0) continue;
            for (const Vec& sigma : level_sums(off_gens, normal, t, budget)) {
                // x - delta in sigma + phi_face  <=>  w - (sigma - v + delta) in phi_face
                Vec nd = add(sub(sigma, v), delta);
                if (seen.insert(nd).second) nrow.deltas.push_back(nd);
            }
        }
        if (nrow.deltas.empty()) return std::nullopt;
        out.push_back(std::move(nrow));
    }
    (void)face_gens;
    return out;
}

std::vector<Vec> solve(const TranslateSystem& sys, EngineBudget& budget) {
    spend(budget, 16);
    const std::size_t d = sys.universe.ambient_dim;

    for (const TranslateRow& row : sys.rows)
        if (row.deltas.empty()) return {};

    Node node(sys);
    const RationalCone& cone = node.sat.cone;
    const IntegerLattice& group = node.sat.lattice;

    if (sys.universe.rank() != group.rank())
        throw InvalidInput("minimal_set_elements: universe rank differs from semigroup span");

    // Congruence classes of the universe modulo group(phi); a point can only
    // satisfy a row through a delta in its own class.
    LatticeQuotient quotient = lattice_quotient(sys.universe, group);
    struct ClassPlan {
        Vec rep;
        std::vector<Vec> chosen;  // one delta per row
    };
    std::vector<ClassPlan> plans;
    for (const Vec& rep : quotient.representatives) {
        ClassPlan plan{rep, {}};
        bool feasible = true;
        for (const TranslateRow& row : sys.rows) {
            const Vec* pick = nullptr;
            for (const Vec& delta : row.deltas)
                if (lattice_contains(group, sub(delta, rep))) { pick = &delta; break; }
            if (!pick) { feasible = false; break; }
            plan.chosen.push_back(*pick);
        }
        if (feasible) plans.push_back(std::move(plan));
    }
    if (plans.empty()) return {};

    Vec margin = conductor_element(node.sat);  // margin with margin + sat(phi) in phi
    Vec gen_sum = zero_vec(d);
    for (const Vec& g : node.phi.generators()) gen_sum = add(gen_sum, g);

    // Anchors: rep + k * gen_sum deep enough that every chosen delta is
    // cleared with the conductor margin, and the point lies in the cone.
    std::vector<Vec> anchors, slab_anchors;
    for (const ClassPlan& plan : plans) {
        Int k = 0;
        for (const Vec& facet : cone.facets) {
            Int step = dot(facet, gen_sum);
            // gen_sum lies in the relative interior, so step > 0.
            Int base = dot(facet, plan.rep);
            Int need = dot(facet, margin);  // cone clearance: facet(x) >= need + facet(delta)
            for (const Vec& delta : plan.chosen) {
                Int target = need + dot(facet, delta);
                if (base < target) k = std::max(k, ceil_div(target - base, step));
            }
            if (base < 0) k = std::max(k, ceil_div(-base, step));
        }
        Vec anchor = add(plan.rep, scale(k, gen_sum));
        anchors.push_back(anchor);
        slab_anchors.push_back(add(anchor, margin));
    }

    // One-dimensional base case: the order is total, so the minimum is the
    // first member on the ray, bounded by the best anchor.
    if (cone.dim == 1) {
        Vec u0 = lattice_primitive_on_ray(sys.universe, cone.rays[0]);
        Int unit = degree(u0);
        Int best_bound;
        bool first = true;
        for (const Vec& a : anchors) {
            Int pos = degree(a) / unit;
            if (first || pos < best_bound) best_bound = pos;
            first = false;
        }
        for (Int k = 0; k <= best_bound; ++k) {
            spend(budget, 1);
            Vec x = scale(k, u0);
            if (node.in_set(x)) return {x};
        }
        return {};
    }

    std::set<Vec> candidates(slab_anchors.begin(), slab_anchors.end());

    for (std::size_t fi = 0; fi < cone.facets.size(); ++fi) {
        const Vec& normal = cone.facets[fi];
        Int level_bound = 0;
        for (const Vec& a : slab_anchors) level_bound = std::max(level_bound, dot(normal, a));

        std::vector<Vec> face_gens;
        for (const Vec& g : node.phi.generators())
            if (dot(normal, g) == 0) face_gens.push_back(g);

        for (Int level = 0; level < level_bound; ++level) {
            std::vector<Vec> slice = slice_generators(node, fi, level, budget);
            if (face_gens.empty()) {
                for (const Vec& v : slice)
                    if (node.in_set(v)) candidates.insert(v);
                continue;
            }
            IntegerLattice sub_universe = lattice_meet_kernel(sys.universe, {normal});
            for (const Vec& v : slice) {
                auto rows = translate_rows(node, normal, face_gens, v, budget);
                if (!rows) continue;
                TranslateSystem sub{face_gens, sub_universe, std::move(*rows)};
                for (const Vec& w : solve(sub, budget)) candidates.insert(add(v, w));
            }
        }
    }

    // Verify and minimalize pairwise; the candidate set provably contains
    // every minimal element, so pairwise domination is conclusive.
    std::vector<Vec> verified;
    for (const Vec& x : candidates)
        if (node.universe_sat_contains(x) && node.in_set(x)) verified.push_back(x);
    std::vector<Vec> minimal;
    for (const Vec& x : verified) {
        bool dominated = false;
        for (const Vec& y : verified) {
            if (y == x) continue;
            Vec diff = sub(x, y);
            if (!is_zero(diff) && node.universe_sat_contains(diff)) { dominated = true; break; }
        }
        if (!dominated) minimal.push_back(x);
    }
    sort_deg_lex(minimal);
    return minimal;
}

}  // namespace

std::vector<Vec> minimal_set_elements(const TranslateSystem& system, EngineBudget& budget) {
    return solve(system, budget);
}

}  // namespace semicond
