#pragma once

// The invariant chi_pi: a finitely supported function C^x -> Gamma, the
// C^x-action on such functions, and the same-block test built on orbit
// canonical forms.

#include <map>
#include <vector>

#include "loopblocks/drinfeld.hpp"
#include "loopblocks/root_system.hpp"

namespace loopblocks {

class XiFunction {
public:
    using Support = std::map<ExactPoint, Residue>;

    XiFunction() = default;
    explicit XiFunction(IntVector gamma_factors) : factors_(std::move(gamma_factors)) {}

    /// Zero residues are dropped; throws DomainError on residues out of range.
    XiFunction(IntVector gamma_factors, const Support& values);

    const IntVector& gamma_factors() const { return factors_; }
    const Support& support() const { return support_; }
    bool is_zero() const { return support_.empty(); }

    /// Value at a point (zero residue off the support).
    Residue at(const ExactPoint& z) const;

    /// Pointwise sum; cancellations are pruned.
    XiFunction& operator+=(const XiFunction& other);
    friend XiFunction operator+(XiFunction a, const XiFunction& b) { return a += b; }

    friend bool operator==(const XiFunction& a, const XiFunction& b) {
        return a.factors_ == b.factors_ && a.support_ == b.support_;
    }
    friend bool operator!=(const XiFunction& a, const XiFunction& b) { return !(a == b); }

    /// Total order used for canonical forms: sorted support entries, lexicographic.
    friend bool operator<(const XiFunction& a, const XiFunction& b);

private:
    void set(const ExactPoint& z, Residue r);

    IntVector factors_;
    Support support_;
};

struct XiOrbitKey {
    XiFunction canonical;
    ExactPoint shift; // canonical == xi_scale(shift, input)

    friend bool operator==(const XiOrbitKey& a, const XiOrbitKey& b) { return a.canonical == b.canonical; }
};

struct BlockVerdict {
    bool same_block = false;
    // set for non-simply-laced types, where the orbit test is not known to be complete
    bool conjectural = false;
};

/// chi_{i,a}: the class of varpi_i at a, zero elsewhere.
XiFunction chi_generator(const RootSystem& rs, int node, const ExactPoint& a);

XiFunction chi_of_pi(const RootSystem& rs, const DrinfeldPoly& pi);

/// (a . chi)(z) = chi(a z).
XiFunction xi_scale(const ExactPoint& a, const XiFunction& chi);

XiOrbitKey orbit_canonical(const XiFunction& chi);

BlockVerdict same_block(const RootSystem& rs, const DrinfeldPoly& a, const DrinfeldPoly& b);

} // namespace loopblocks
