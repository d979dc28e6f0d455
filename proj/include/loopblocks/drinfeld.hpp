#pragma once

// Drinfeld polynomials stored in the free-monoid basis: pi is the product of
// generators varpi_{i,a} = (1 - a u) at node i, recorded as a multiplicity map
// (node, point) -> count. Nodes are 1-based (Bourbaki labels).

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "loopblocks/cyclotomic.hpp"
#include "loopblocks/exact_point.hpp"
#include "loopblocks/root_system.hpp"

namespace loopblocks {

class DrinfeldPoly {
public:
    using Key = std::pair<int, ExactPoint>;
    using Support = std::map<Key, std::int64_t>;

    DrinfeldPoly() = default;
    /// The unit 1 of the monoid over the given type.
    explicit DrinfeldPoly(SimpleType type) : type_(type) {}

    /// Throws DomainError on nodes outside 1..rank or nonpositive multiplicities.
    DrinfeldPoly(SimpleType type, Support support);

    const SimpleType& type() const { return type_; }
    const Support& support() const { return support_; }
    bool is_one() const { return support_.empty(); }

    std::int64_t degree(int node) const;
    /// Points at a node, each repeated by multiplicity, in ExactPoint order.
    std::vector<ExactPoint> roots(int node) const;
    /// Distinct points of the whole support, sorted.
    std::vector<ExactPoint> points() const;

    friend bool operator==(const DrinfeldPoly& a, const DrinfeldPoly& b) {
        return a.type_ == b.type_ && a.support_ == b.support_;
    }
    friend bool operator!=(const DrinfeldPoly& a, const DrinfeldPoly& b) { return !(a == b); }

private:
    SimpleType type_;
    Support support_;
};

struct CoprimeFactor {
    Weight weight;
    ExactPoint point;

    bool operator==(const CoprimeFactor&) const = default;
};

/// pi^+_{i,k} and pi^-_{i,k}, k = 0..deg pi_i. Entry k carries graded degree +k
/// (resp. -k): it is the eigenvalue of Lambda_{i,+k} (resp. Lambda_{i,-k}) on
/// the l-highest weight vector.
struct PolyCoeffs {
    int node = 1;
    std::vector<CyclotomicNumber> plus_coeffs;
    std::vector<CyclotomicNumber> minus_coeffs;
};

DrinfeldPoly pi_generator(const SimpleType& type, int node, const ExactPoint& a);

/// pi_{lambda,a} = prod_i varpi_{i,a}^{lambda_i}.
DrinfeldPoly pi_lambda_at(const SimpleType& type, const Weight& lambda, const ExactPoint& a);

/// Throws DomainError if the two polynomials live over different root systems.
DrinfeldPoly pi_multiply(const DrinfeldPoly& a, const DrinfeldPoly& b);

Weight pi_lambda(const DrinfeldPoly& pi);

/// Largest r with every pi_i in C[u^r]. Throws DomainError for pi = 1.
std::int64_t m_of_pi(const DrinfeldPoly& pi);

/// Unique factorization into pi_{lambda_j, a_j} with distinct a_j, sorted by point.
std::vector<CoprimeFactor> coprime_factorize(const DrinfeldPoly& pi);

DrinfeldPoly rebuild_from_factors(const SimpleType& type, const std::vector<CoprimeFactor>& factors);

/// (a . pi)(u) = pi(a u): every root b moves to b / a.
DrinfeldPoly pi_scale(const ExactPoint& a, const DrinfeldPoly& pi);

/// Some a with pi_scale(a, from) == to, if one exists.
std::optional<ExactPoint> scale_relating(const DrinfeldPoly& from, const DrinfeldPoly& to);

/// Smallest conductor whose cyclotomic field contains every point at the node.
std::int64_t node_conductor(const DrinfeldPoly& pi, int node);

/// Direct expansion of prod (1 - a u)^mult over the node's roots.
PolyCoeffs poly_coefficients(const DrinfeldPoly& pi, int node);

/// Coefficients of exp(-sum_{k>0} p_k u^k / k), p_k the power sums of the roots,
/// truncated at the number of roots.
std::vector<CyclotomicNumber> newton_coefficients(const std::vector<ExactPoint>& roots);

/// Weight of pi*: -w_0 lambda_pi.
Weight dual_weight_of_pi(const RootSystem& rs, const DrinfeldPoly& pi);

} // namespace loopblocks
