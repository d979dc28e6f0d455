#include "loopblocks/graded_loop.hpp"

#include "loopblocks/characters.hpp"
#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    return ((a % m) + m) % m;
}

} // namespace

SimpleLabel::SimpleLabel(DrinfeldPoly pi, std::int64_t s) : pi_(std::move(pi)) {
    if (pi_.is_one())
        throw DomainError("L^s(V(1)) is not a label: L(C) splits into the one-dimensional C_{r delta}");
    m_ = m_of_pi(pi_);
    s_ = floor_mod(s, m_);
}

std::int64_t summand_count(const DrinfeldPoly& pi) {
    if (pi.is_one())
        throw DomainError("L(V(1)) = L(C) is the infinite sum of the C_{r delta}, not finitely many summands");
    return m_of_pi(pi);
}

std::vector<SimpleLabel> summand_labels(const DrinfeldPoly& pi) {
    std::vector<SimpleLabel> out;
    const std::int64_t m = summand_count(pi);
    for (std::int64_t s = 0; s < m; ++s) out.emplace_back(pi, s);
    return out;
}

bool simple_iso(const RootSystem& rs, const SimpleLabel& a, const SimpleLabel& b) {
    if (a.pi().type() != rs.type || b.pi().type() != rs.type)
        throw DomainError("labels do not belong to root system " + to_string(rs.type));
    // pi_scale(x, a.pi) has the same m, so the residue test is well posed
    if (!scale_relating(a.pi(), b.pi())) return false;
    return floor_mod(b.s() - a.s(), a.m()) == 0;
}

bool lg_restriction_iso(const SimpleLabel& a, const SimpleLabel& b) {
    return scale_relating(a.pi(), b.pi()).has_value();
}

GradedWeight reduce_graded_weight(const RootSystem& rs, const GradedWeight& gw) {
    if (!gw.finite_part.is_dominant())
        throw DomainError("graded weight reduction needs a dominant finite part");
    if (gw.finite_part.is_zero()) throw DomainError("r_lambda is undefined for the zero weight");
    return {gw.finite_part, floor_mod(gw.grade, r_lambda(rs, gw.finite_part))};
}

std::int64_t graded_multiplicity(const RootSystem& rs, const DrinfeldPoly& pi, const Weight& mu, std::int64_t) {
    if (pi.type() != rs.type) throw DomainError("Drinfeld polynomial type does not match root system");
    if (m_of_pi(pi) > 1)
        throw DomainError("graded multiplicities of a single summand need m(pi) = 1; for m(pi) > 1 only the sum "
                          "over the m(pi) summands is determined, and it equals the tensor-product weight multiplicity");
    std::vector<Weight> factors;
    for (const auto& f : coprime_factorize(pi)) factors.push_back(f.weight);
    return tensor_weight_multiplicity(rs, factors, mu);
}

} // namespace loopblocks
