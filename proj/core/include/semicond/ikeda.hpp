#pragma once

#include "semicond/conductor.hpp"
#include "semicond/ideals.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semicond {

// Counting certificate for non-containment of the conductor in parameter
// ideals. With the maximal monomial ideal decomposed as conductor + <excess>,
// a containment in any parameter ideal would force
// mu(maximal) <= dim + |excess|; when the count exceeds that, non-containment
// holds for every parameter system, monomial or not.
struct IkedaCertificate {
    enum class Verdict { CertifiedUniversal, Inconclusive, Normal };

    Int mu = 0;               // number of minimal semigroup generators
    std::size_t dim = 0;      // Krull dimension
    std::vector<Vec> excess;  // minimal generators outside the conductor
    Verdict verdict = Verdict::Inconclusive;
    std::optional<Vec> oneless_witness;  // y with maximal = conductor + <y>

    // Hypothesis flags attached to Inconclusive outcomes so a reader can
    // finish the case by hand.
    bool dimension_one = false;
    std::optional<bool> gorenstein_numerical;  // set for numerical instances
    std::string note;
};

std::string to_string(IkedaCertificate::Verdict v);

// The excess set E: minimal semigroup generators not in the conductor. The
// identity maximal = conductor + <E> is verified before returning. Refuses
// an uncertified conductor.
std::vector<Vec> excess_decomposition(const SaturationResult& sat, const ConductorResult& C);

// Full certificate; refuses an uncertified conductor.
IkedaCertificate universal_certificate(const SaturationResult& sat, const ConductorResult& C);

// A single monomial y with maximal = conductor + <y>, when one exists.
// |E| <= 1 settles it directly; for larger excess sets every monomial up to
// the configured degree cap is tried.
std::optional<Vec> oneless_witness(const SaturationResult& sat, const ConductorResult& C);

// True iff every conductor generator lies in the monomial ideal <xs>.
// xs must be a system of parameters and C certified.
bool check_sop_containment(const SaturationResult& sat, const ConductorResult& C,
                           const std::vector<Vec>& xs);

// One multiplication check: element + module generator stays in the
// semigroup, with a generator factorization as the witness.
struct MultiplicationCheck {
    Vec element;
    Vec module_generator;
    Vec product;
    std::vector<Vec> factorization;
    bool ok = false;
};

// Mechanizes the hand verification that J times the saturation stays inside
// the semigroup: every element of J against every nonzero module generator.
std::vector<MultiplicationCheck> verify_multiplication_table(const SaturationResult& sat,
                                                             const std::vector<Vec>& elements);

// Every monomial system of parameters with entry degree <= cap. A monomial
// system of parameters must pick exactly one element on each extreme ray, so
// none exist when the cone is not simplicial.
std::vector<std::vector<Vec>> enumerate_monomial_sops(const SaturationResult& sat, int degree_cap);

}  // namespace semicond
