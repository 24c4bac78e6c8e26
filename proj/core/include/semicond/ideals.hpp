#pragma once

#include "semicond/normalization.hpp"

#include <memory>
#include <vector>

namespace semicond {

// Monomial ideal of the semigroup algebra, represented by its minimal
// monomial generators. With a saturation attached the ideal lives over the
// integral closure instead of the base semigroup. generators == {0} is the
// unit ideal; an empty generator list is the zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal(AffineSemigroup ambient, std::vector<Vec> generators);
    MonomialIdeal(std::shared_ptr<const SaturationResult> sat, std::vector<Vec> generators);

    const AffineSemigroup& ambient() const { return ambient_; }
    const std::vector<Vec>& generators() const { return generators_; }
    bool over_normalization() const { return sat_ != nullptr; }
    bool is_unit() const { return generators_.size() == 1 && is_zero(generators_[0]); }
    bool is_zero_ideal() const { return generators_.empty(); }

    // v in the ideal iff v - g lands in the ambient semigroup (or its
    // saturation) for some generator g.
    bool contains(const Vec& v) const;

    bool operator==(const MonomialIdeal& o) const {
        return ambient_ == o.ambient_ && generators_ == o.generators_ &&
               over_normalization() == o.over_normalization();
    }

private:
    AffineSemigroup ambient_;
    std::shared_ptr<const SaturationResult> sat_;
    std::vector<Vec> generators_;

    bool ambient_member(const Vec& v) const;
    void minimalize();
};

// Sum of ideals: minimalized union of the generator sets.
MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J);

// I subset of J, tested generator by generator.
bool ideal_subset(const MonomialIdeal& I, const MonomialIdeal& J);

// Radical-membership proxy: every minimal semigroup generator has a multiple
// inside the ideal. Power searches are capped; when the cap is reached
// without a sound refutation the test throws BoundExceeded rather than
// answering false.
bool is_m_primary(const MonomialIdeal& I);

// xs is a system of parameters: dimension-many nonzero semigroup elements
// generating an ideal primary to the maximal one. A wrong-length list is
// simply not a system of parameters; an element outside the semigroup is an
// input error.
bool is_system_of_parameters(const AffineSemigroup& S, const std::vector<Vec>& xs);

}  // namespace semicond
