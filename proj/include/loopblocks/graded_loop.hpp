#pragma once

// Character-level bookkeeping for L(V) = V (x) C[t, t^-1]: labels of the simple
// summands L^s(V(pi)), their isomorphism classes, and graded weights.
//
// For every pi != 1 the summands satisfy
//   sum_{s < m(pi)} dim L^s(V(pi))_{mu + n delta} = dim (V(lambda_1) (x) ... (x) V(lambda_k))_mu
// for the coprime factorization pi = prod pi_{lambda_j, a_j}. The per-s split
// needs the eta_m eigenspaces of V(pi) and is not computed here.

#include <cstdint>

#include "loopblocks/drinfeld.hpp"
#include "loopblocks/root_system.hpp"

namespace loopblocks {

/// finite_part + grade * delta in P_e = P + Z delta.
struct GradedWeight {
    Weight finite_part;
    std::int64_t grade = 0;

    bool operator==(const GradedWeight&) const = default;
};

/// L^s(V(pi)) with pi != 1 and 0 <= s < m(pi). The one-dimensional simples
/// C_{r delta} are labelled by the bare integer r and never by this type.
class SimpleLabel {
public:
    /// Reduces s modulo m(pi); throws DomainError for pi = 1.
    SimpleLabel(DrinfeldPoly pi, std::int64_t s);

    const DrinfeldPoly& pi() const { return pi_; }
    std::int64_t s() const { return s_; }
    std::int64_t m() const { return m_; }

    bool operator==(const SimpleLabel& o) const { return pi_ == o.pi_ && s_ == o.s_; }

private:
    DrinfeldPoly pi_;
    std::int64_t s_;
    std::int64_t m_;
};

/// Number of simple summands of L(V(pi)), i.e. m(pi). Throws DomainError for pi = 1.
std::int64_t summand_count(const DrinfeldPoly& pi);

/// The labels L^0(V(pi)), ..., L^{m-1}(V(pi)).
std::vector<SimpleLabel> summand_labels(const DrinfeldPoly& pi);

/// Isomorphism of L^e(g)-modules: pi' = pi(a u) for some a, and s = r mod m(pi).
bool simple_iso(const RootSystem& rs, const SimpleLabel& a, const SimpleLabel& b);

/// Isomorphism after restriction to L(g): the residues are forgotten.
bool lg_restriction_iso(const SimpleLabel& a, const SimpleLabel& b);

/// (lambda, n) -> (lambda, n mod r_lambda). Needs a dominant nonzero finite part.
GradedWeight reduce_graded_weight(const RootSystem& rs, const GradedWeight& gw);

/// dim L(V(pi))_{mu + n delta} when m(pi) = 1 (then L(V(pi)) is simple). The
/// value does not depend on n. Throws DomainError when m(pi) > 1.
std::int64_t graded_multiplicity(const RootSystem& rs, const DrinfeldPoly& pi, const Weight& mu, std::int64_t n);

} // namespace loopblocks
