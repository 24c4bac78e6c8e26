#include "semicond/ideals.hpp"

#include "semicond/errors.hpp"

#include <algorithm>
#include <set>

namespace semicond {

MonomialIdeal::MonomialIdeal(AffineSemigroup ambient, std::vector<Vec> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
    minimalize();
}

MonomialIdeal::MonomialIdeal(std::shared_ptr<const SaturationResult> sat,
                             std::vector<Vec> generators)
    : ambient_(sat->base), sat_(std::move(sat)), generators_(std::move(generators)) {
    minimalize();
}

bool MonomialIdeal::ambient_member(const Vec& v) const {
    if (sat_) return is_nonnegative(v) && sat_->saturation_contains(v);
    return ambient_.contains_clipped(v);
}

void MonomialIdeal::minimalize() {
    for (const Vec& g : generators_) {
        if (g.size() != ambient_.ambient_dim())
            throw DimensionMismatch("MonomialIdeal: generator dimension mismatch");
        if (!ambient_member(g))
            throw InvalidInput("MonomialIdeal: generator " + to_string(g) +
                               " lies outside the ambient semigroup");
    }
    sort_deg_lex(generators_);
    generators_.erase(std::unique(generators_.begin(), generators_.end()), generators_.end());
    std::vector<Vec> kept;
    for (const Vec& g : generators_) {
        bool dominated = false;
        for (const Vec& h : generators_) {
            if (h == g) continue;
            Vec diff = sub(g, h);
            if (!is_zero(diff) && ambient_member(diff)) { dominated = true; break; }
        }
        if (!dominated) kept.push_back(g);
    }
    generators_ = std::move(kept);
}

bool MonomialIdeal::contains(const Vec& v) const {
    if (v.size() != ambient_.ambient_dim())
        throw DimensionMismatch("MonomialIdeal::contains: dimension mismatch");
    for (const Vec& g : generators_)
        if (ambient_member(sub(v, g))) return true;
    return false;
}

MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (!(I.ambient() == J.ambient()) || I.over_normalization() != J.over_normalization())
        throw InvalidInput("ideal_sum: ambient semigroups differ");
    std::vector<Vec> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal(I.ambient(), std::move(gens));
}

bool ideal_subset(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (!(I.ambient() == J.ambient()))
        throw InvalidInput("ideal_subset: ambient semigroups differ");
    for (const Vec& g : I.generators())
        if (!J.contains(g)) return false;
    return true;
}

bool is_m_primary(const MonomialIdeal& I) {
    if (I.is_unit()) throw InvalidInput("is_m_primary: the unit ideal is not proper");
    const AffineSemigroup& S = I.ambient();
    if (I.is_zero_ideal()) return false;

    Int max_deg = 0;
    for (const Vec& g : I.generators()) max_deg = std::max(max_deg, degree(g));
    Int cap = S.caps().power_cap ? Int(*S.caps().power_cap) : 2 * max_deg + Int(S.ambient_dim());

    for (const Vec& g : S.minimal_generators()) {
        bool hit = false;
        for (Int k = 1; k <= cap; ++k)
            if (I.contains(scale(k, g))) { hit = true; break; }
        if (hit) continue;
        // Sound refutation: if no ideal generator's support fits inside the
        // support of g, no multiple of g can dominate one.
        bool possibly = false;
        for (const Vec& x : I.generators()) {
            bool support_ok = true;
            for (std::size_t i = 0; i < g.size(); ++i)
                if (x[i] > 0 && g[i] == 0) { support_ok = false; break; }
            if (support_ok) { possibly = true; break; }
        }
        if (!possibly) return false;
        throw BoundExceeded("m_primary_power", "power search for " + to_string(g) +
                                                   " exhausted the cap " + cap.str() +
                                                   " without a sound refutation");
    }
    return true;
}

bool is_system_of_parameters(const AffineSemigroup& S, const std::vector<Vec>& xs) {
    for (const Vec& x : xs) {
        if (x.size() != S.ambient_dim())
            throw DimensionMismatch("is_system_of_parameters: element dimension mismatch");
        if (is_zero(x) || !S.contains_clipped(x))
            throw InvalidInput("is_system_of_parameters: " + to_string(x) +
                               " is not a nonzero semigroup element");
    }
    if (xs.size() != S.dimension()) return false;
    std::set<Vec> distinct(xs.begin(), xs.end());
    if (distinct.size() != xs.size()) return false;
    return is_m_primary(MonomialIdeal(S, xs));
}

}  // namespace semicond
