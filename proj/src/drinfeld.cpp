#include "loopblocks/drinfeld.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "loopblocks/error.hpp"

namespace loopblocks {

DrinfeldPoly::DrinfeldPoly(SimpleType type, Support support) : type_(type), support_(std::move(support)) {
    for (const auto& [key, mult] : support_) {
        if (key.first < 1 || key.first > type_.rank)
            throw DomainError("node " + std::to_string(key.first) + " outside 1.." + std::to_string(type_.rank) +
                              " for type " + to_string(type_));
        if (mult <= 0) throw DomainError("Drinfeld multiplicities must be positive");
    }
}

std::int64_t DrinfeldPoly::degree(int node) const {
    std::int64_t d = 0;
    for (const auto& [key, mult] : support_)
        if (key.first == node) d += mult;
    return d;
}

std::vector<ExactPoint> DrinfeldPoly::roots(int node) const {
    std::vector<ExactPoint> out;
    for (const auto& [key, mult] : support_)
        if (key.first == node)
            for (std::int64_t k = 0; k < mult; ++k) out.push_back(key.second);
    return out;
}

std::vector<ExactPoint> DrinfeldPoly::points() const {
    std::set<ExactPoint> s;
    for (const auto& entry : support_) s.insert(entry.first.second);
    return {s.begin(), s.end()};
}

DrinfeldPoly pi_generator(const SimpleType& type, int node, const ExactPoint& a) {
    return DrinfeldPoly(type, {{{node, a}, 1}});
}

DrinfeldPoly pi_lambda_at(const SimpleType& type, const Weight& lambda, const ExactPoint& a) {
    if (lambda.size() != static_cast<std::size_t>(type.rank) || !lambda.is_dominant())
        throw DomainError("pi_{lambda,a} needs a dominant weight of rank " + std::to_string(type.rank));
    DrinfeldPoly::Support s;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        if (lambda.coords[i] > 0) s[{static_cast<int>(i) + 1, a}] = lambda.coords[i];
    return DrinfeldPoly(type, std::move(s));
}

DrinfeldPoly pi_multiply(const DrinfeldPoly& a, const DrinfeldPoly& b) {
    if (a.type() != b.type())
        throw DomainError("cannot multiply Drinfeld polynomials over " + to_string(a.type()) + " and " +
                          to_string(b.type()));
    auto s = a.support();
    for (const auto& [key, mult] : b.support()) s[key] += mult;
    return DrinfeldPoly(a.type(), std::move(s));
}

Weight pi_lambda(const DrinfeldPoly& pi) {
    Weight w = Weight::zero(pi.type().rank);
    for (const auto& [key, mult] : pi.support()) w.coords[static_cast<std::size_t>(key.first - 1)] += mult;
    return w;
}

std::int64_t m_of_pi(const DrinfeldPoly& pi) {
    if (pi.is_one()) throw DomainError("m(1) is unbounded: every r works for the trivial Drinfeld polynomial");
    std::int64_t g = 0;
    for (int i = 1; i <= pi.type().rank; ++i) g = std::gcd(g, pi.degree(i));
    // rotation by zeta_r splits each node's roots into orbits of size r, so r | g
    for (std::int64_t r = g; r > 1; --r) {
        if (g % r) continue;
        ExactPoint zeta = ExactPoint::root_of_unity(r);
        bool invariant = std::all_of(pi.support().begin(), pi.support().end(), [&](const auto& entry) {
            auto it = pi.support().find({entry.first.first, entry.first.second * zeta});
            return it != pi.support().end() && it->second == entry.second;
        });
        if (invariant) return r;
    }
    return 1;
}

std::vector<CoprimeFactor> coprime_factorize(const DrinfeldPoly& pi) {
    std::map<ExactPoint, Weight> grouped;
    for (const auto& [key, mult] : pi.support()) {
        auto [it, inserted] = grouped.try_emplace(key.second, Weight::zero(pi.type().rank));
        it->second.coords[static_cast<std::size_t>(key.first - 1)] += mult;
    }
    std::vector<CoprimeFactor> out;
    for (auto& [point, weight] : grouped) out.push_back({weight, point});
    return out;
}

DrinfeldPoly rebuild_from_factors(const SimpleType& type, const std::vector<CoprimeFactor>& factors) {
    DrinfeldPoly pi(type);
    for (const auto& f : factors) pi = pi_multiply(pi, pi_lambda_at(type, f.weight, f.point));
    return pi;
}

DrinfeldPoly pi_scale(const ExactPoint& a, const DrinfeldPoly& pi) {
    DrinfeldPoly::Support s;
    for (const auto& [key, mult] : pi.support()) s[{key.first, key.second / a}] = mult;
    return DrinfeldPoly(pi.type(), std::move(s));
}

std::optional<ExactPoint> scale_relating(const DrinfeldPoly& from, const DrinfeldPoly& to) {
    if (from.type() != to.type()) return std::nullopt;
    if (from.is_one()) return to.is_one() ? std::optional(ExactPoint::one()) : std::nullopt;
    if (pi_lambda(from) != pi_lambda(to)) return std::nullopt;
    const auto& [anchor, mult] = *from.support().begin();
    for (const auto& [key, other_mult] : to.support()) {
        if (key.first != anchor.first || other_mult != mult) continue;
        ExactPoint a = anchor.second / key.second;
        if (pi_scale(a, from) == to) return a;
    }
    return std::nullopt;
}

std::int64_t node_conductor(const DrinfeldPoly& pi, int node) {
    std::int64_t n = 1;
    for (const auto& [key, mult] : pi.support())
        if (key.first == node) n = std::lcm(n, key.second.phase_order());
    return n;
}

PolyCoeffs poly_coefficients(const DrinfeldPoly& pi, int node) {
    if (node < 1 || node > pi.type().rank) throw DomainError("node " + std::to_string(node) + " out of range");
    const std::int64_t n = node_conductor(pi, node);
    PolyCoeffs out;
    out.node = node;
    out.plus_coeffs = {CyclotomicNumber(n, 1)};
    ExactPoint product;
    auto roots = pi.roots(node);
    for (const auto& a : roots) {
        CyclotomicNumber root = CyclotomicNumber::from_point(n, a);
        out.plus_coeffs.emplace_back(n);
        for (std::size_t k = out.plus_coeffs.size() - 1; k > 0; --k)
            out.plus_coeffs[k] -= root * out.plus_coeffs[k - 1];
        product = product * a;
    }
    // u^deg pi(1/u) normalized by its constant term, the leading coefficient
    // (-1)^deg prod a of pi
    const std::size_t deg = roots.size();
    CyclotomicNumber inverse_leading = CyclotomicNumber::from_point(n, product.inverse());
    if (deg % 2) inverse_leading *= Rational(-1);
    for (std::size_t k = 0; k <= deg; ++k) out.minus_coeffs.push_back(out.plus_coeffs[deg - k] * inverse_leading);
    return out;
}

std::vector<CyclotomicNumber> newton_coefficients(const std::vector<ExactPoint>& roots) {
    std::int64_t n = 1;
    for (const auto& a : roots) n = std::lcm(n, a.phase_order());
    const std::size_t size = roots.size();
    std::vector<CyclotomicNumber> power_sums(size + 1, CyclotomicNumber(n));
    std::vector<ExactPoint> powers(roots.size());
    for (std::size_t k = 1; k <= size; ++k)
        for (std::size_t r = 0; r < roots.size(); ++r) {
            powers[r] = powers[r] * roots[r];
            power_sums[k] += CyclotomicNumber::from_point(n, powers[r]);
        }
    // C = exp(-S), S' = sum p_k u^{k-1}  =>  k c_k = -sum_{j=1}^k p_j c_{k-j}
    std::vector<CyclotomicNumber> c{CyclotomicNumber(n, 1)};
    for (std::size_t k = 1; k <= size; ++k) {
        CyclotomicNumber acc(n);
        for (std::size_t j = 1; j <= k; ++j) acc += power_sums[j] * c[k - j];
        acc *= Rational(-1) / Rational(static_cast<long>(k));
        c.push_back(acc);
    }
    return c;
}

Weight dual_weight_of_pi(const RootSystem& rs, const DrinfeldPoly& pi) {
    if (pi.type() != rs.type) throw DomainError("Drinfeld polynomial type does not match root system");
    return dual_weight(rs, pi_lambda(pi));
}

} // namespace loopblocks
