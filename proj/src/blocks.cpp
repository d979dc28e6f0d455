#include "loopblocks/blocks.hpp"

#include <algorithm>

#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

bool residue_is_zero(const Residue& r) {
    return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

} // namespace

XiFunction::XiFunction(IntVector gamma_factors, const Support& values) : factors_(std::move(gamma_factors)) {
    for (const auto& [z, r] : values) {
        if (r.size() != factors_.size()) throw DomainError("residue length does not match Gamma");
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k] < 0 || r[k] >= factors_[k]) throw DomainError("residue out of range for Gamma");
        set(z, r);
    }
}

void XiFunction::set(const ExactPoint& z, Residue r) {
    if (residue_is_zero(r))
        support_.erase(z);
    else
        support_[z] = std::move(r);
}

Residue XiFunction::at(const ExactPoint& z) const {
    auto it = support_.find(z);
    return it == support_.end() ? Residue(factors_.size(), 0) : it->second;
}

XiFunction& XiFunction::operator+=(const XiFunction& other) {
    if (other.factors_ != factors_) throw DomainError("cannot add functions with values in different groups");
    for (const auto& [z, r] : other.support_) {
        Residue sum = at(z);
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = (sum[k] + r[k]) % factors_[k];
        set(z, std::move(sum));
    }
    return *this;
}

bool operator<(const XiFunction& a, const XiFunction& b) {
    if (a.factors_ != b.factors_) return a.factors_ < b.factors_;
    return std::lexicographical_compare(a.support_.begin(), a.support_.end(), b.support_.begin(), b.support_.end());
}

XiFunction chi_generator(const RootSystem& rs, int node, const ExactPoint& a) {
    if (node < 1 || node > rs.rank()) throw DomainError("node " + std::to_string(node) + " out of range");
    return XiFunction(rs.gamma.invariant_factors,
                      {{a, rs.gamma.project(Weight::fundamental(rs.rank(), node - 1))}});
}

XiFunction chi_of_pi(const RootSystem& rs, const DrinfeldPoly& pi) {
    if (pi.type() != rs.type) throw DomainError("Drinfeld polynomial type does not match root system");
    XiFunction chi(rs.gamma.invariant_factors);
    for (const auto& factor : coprime_factorize(pi))
        chi += XiFunction(rs.gamma.invariant_factors, {{factor.point, rs.gamma.project(factor.weight)}});
    return chi;
}

XiFunction xi_scale(const ExactPoint& a, const XiFunction& chi) {
    // the new function is nonzero at z iff chi(a z) != 0, so stored points move b -> b / a
    XiFunction::Support moved;
    for (const auto& [z, r] : chi.support()) moved[z / a] = r;
    return XiFunction(chi.gamma_factors(), moved);
}

XiOrbitKey orbit_canonical(const XiFunction& chi) {
    XiOrbitKey best{chi, ExactPoint::one()};
    bool first = true;
    for (const auto& entry : chi.support()) {
        XiFunction candidate = xi_scale(entry.first, chi);
        if (first || candidate < best.canonical) {
            best = {std::move(candidate), entry.first};
            first = false;
        }
    }
    return best;
}

BlockVerdict same_block(const RootSystem& rs, const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.type() != b.type() || a.type() != rs.type)
        throw DomainError("same_block needs both Drinfeld polynomials over " + to_string(rs.type));
    BlockVerdict v;
    v.same_block = orbit_canonical(chi_of_pi(rs, a)) == orbit_canonical(chi_of_pi(rs, b));
    v.conjectural = !rs.simply_laced;
    return v;
}

} // namespace loopblocks
