#include "semicond/ikeda.hpp"

#include "semicond/errors.hpp"

#include <algorithm>

namespace semicond {

namespace {

void require_certified(const ConductorResult& C) {
    if (!C.certified)
        throw InvalidInput("certificate operations refuse an uncertified conductor result");
}

MonomialIdeal conductor_ideal(const ConductorResult& C) {
    return MonomialIdeal(C.semigroup, C.r_generators);
}

MonomialIdeal maximal_ideal(const AffineSemigroup& S) {
    return MonomialIdeal(S, S.minimal_generators());
}

}  // namespace

std::string to_string(IkedaCertificate::Verdict v) {
    switch (v) {
        case IkedaCertificate::Verdict::CertifiedUniversal: return "certified-universal";
        case IkedaCertificate::Verdict::Inconclusive: return "inconclusive";
        case IkedaCertificate::Verdict::Normal: return "normal";
    }
    return "unknown";
}

std::vector<Vec> excess_decomposition(const SaturationResult& sat, const ConductorResult& C) {
    require_certified(C);
    if (C.is_unit) throw InvalidInput("excess_decomposition: conductor is the unit ideal");
    const AffineSemigroup& S = sat.base;
    std::vector<Vec> excess;
    for (const Vec& g : S.minimal_generators())
        if (!in_conductor(sat, g)) excess.push_back(g);

    // The decomposition maximal = conductor + <excess> must hold exactly.
    MonomialIdeal sum = excess.empty() ? conductor_ideal(C)
                                       : ideal_sum(conductor_ideal(C), MonomialIdeal(S, excess));
    if (!(ideal_subset(sum, maximal_ideal(S)) && ideal_subset(maximal_ideal(S), sum)))
        throw InvalidInput("excess_decomposition: decomposition check failed");
    return excess;
}

std::optional<Vec> oneless_witness(const SaturationResult& sat, const ConductorResult& C) {
    require_certified(C);
    const AffineSemigroup& S = sat.base;
    if (C.is_unit) return std::nullopt;
    std::vector<Vec> excess = excess_decomposition(sat, C);
    MonomialIdeal maximal = maximal_ideal(S);
    if (excess.empty()) return S.minimal_generators().front();
    if (excess.size() == 1) {
        MonomialIdeal sum = ideal_sum(conductor_ideal(C), MonomialIdeal(S, {excess[0]}));
        if (ideal_subset(maximal, sum) && ideal_subset(sum, maximal)) return excess[0];
        return std::nullopt;
    }
    for (const Vec& y : box_points_up_to_degree(S.ambient_dim(),
                                                Int(S.caps().oneless_degree_cap))) {
        if (is_zero(y) || !S.contains(y)) continue;
        MonomialIdeal sum = ideal_sum(conductor_ideal(C), MonomialIdeal(S, {y}));
        if (ideal_subset(maximal, sum) && ideal_subset(sum, maximal)) return y;
    }
    return std::nullopt;
}

IkedaCertificate universal_certificate(const SaturationResult& sat, const ConductorResult& C) {
    require_certified(C);
    const AffineSemigroup& S = sat.base;
    IkedaCertificate cert;
    cert.mu = Int(S.minimal_generators().size());
    cert.dim = S.dimension();
    cert.dimension_one = cert.dim == 1;
    if (S.ambient_dim() == 1)
        cert.gorenstein_numerical = numerical_from_affine(S).is_symmetric();

    if (C.is_unit) {
        cert.verdict = IkedaCertificate::Verdict::Normal;
        cert.note = "the semigroup is saturated; the conductor is the unit ideal";
        return cert;
    }

    cert.excess = excess_decomposition(sat, C);
    cert.oneless_witness = oneless_witness(sat, C);

    if (cert.mu > Int(cert.dim) + Int(cert.excess.size())) {
        cert.verdict = IkedaCertificate::Verdict::CertifiedUniversal;
        cert.note =
            "minimal generator count exceeds dimension plus excess size: no parameter ideal, "
            "monomial or not, contains the conductor";
        return cert;
    }

    cert.verdict = IkedaCertificate::Verdict::Inconclusive;
    std::string hypotheses;
    if (cert.dimension_one) hypotheses += " dimension-one;";
    if (cert.gorenstein_numerical && *cert.gorenstein_numerical)
        hypotheses += " symmetric-numerical (Gorenstein);";
    if (cert.oneless_witness)
        hypotheses += " maximal = conductor + <" + to_string(*cert.oneless_witness) + ">;";
    cert.note = hypotheses.empty()
                    ? "counting certificate inconclusive and no auxiliary hypothesis detected"
                    : "counting certificate inconclusive; hypotheses holding:" + hypotheses;
    return cert;
}

bool check_sop_containment(const SaturationResult& sat, const ConductorResult& C,
                           const std::vector<Vec>& xs) {
    require_certified(C);
    if (!is_system_of_parameters(sat.base, xs))
        throw InvalidInput("check_sop_containment: not a system of parameters");
    MonomialIdeal param(sat.base, xs);
    for (const Vec& u : C.r_generators)
        if (!param.contains(u)) return false;
    return true;
}

std::vector<MultiplicationCheck> verify_multiplication_table(const SaturationResult& sat,
                                                             const std::vector<Vec>& elements) {
    std::vector<MultiplicationCheck> out;
    for (const Vec& j : elements) {
        for (const Vec& g : sat.module_generators) {
            if (is_zero(g)) continue;
            MultiplicationCheck check;
            check.element = j;
            check.module_generator = g;
            check.product = add(j, g);
            auto factors = sat.base.factorization(check.product);
            check.ok = factors.has_value();
            if (factors) check.factorization = *factors;
            out.push_back(std::move(check));
        }
    }
    return out;
}

std::vector<std::vector<Vec>> enumerate_monomial_sops(const SaturationResult& sat,
                                                      int degree_cap) {
    const AffineSemigroup& S = sat.base;
    const std::size_t d = S.dimension();
    if (sat.cone.rays.size() != d) return {};  // non-simplicial: no monomial sop exists

    // Candidates per extreme ray: semigroup points on the ray up to the cap.
    std::vector<std::vector<Vec>> per_ray;
    for (const Vec& ray : sat.cone.rays) {
        std::vector<Vec> members;
        Vec p = primitive(ray);
        for (Int k = 1; k * degree(p) <= degree_cap; ++k)
            if (S.contains(scale(k, p))) members.push_back(scale(k, p));
        if (members.empty()) return {};  // no parameter element reaches this ray
        per_ray.push_back(std::move(members));
    }

    std::vector<std::vector<Vec>> sops;
    std::vector<std::size_t> pick(d, 0);
    while (true) {
        std::vector<Vec> xs;
        for (std::size_t i = 0; i < d; ++i) xs.push_back(per_ray[i][pick[i]]);
        sort_deg_lex(xs);
        if (is_system_of_parameters(S, xs)) sops.push_back(xs);
        std::size_t i = 0;
        while (i < d) {
            if (++pick[i] < per_ray[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    return sops;
}

}  // namespace semicond
