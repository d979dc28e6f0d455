#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loopblocks/exact_point.hpp"
#include "loopblocks/rational.hpp"

namespace loopblocks {

/// Coefficients (constant term first) of the N-th cyclotomic polynomial,
/// obtained by exact division of u^N - 1 by Phi_d for the proper divisors d.
const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n);

/// Element of Q(zeta_N), zeta_N = exp(2 pi i / N), in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1}.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(std::int64_t conductor, const Rational& value = 0);

    /// q * zeta_N^k for the point q * e(k/N); N must be a multiple of the phase order.
    static CyclotomicNumber from_point(std::int64_t conductor, const ExactPoint& p);

    std::int64_t conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Rational value; throws DomainError if not rational.
    Rational rational_value() const;

    /// Same number viewed in Q(zeta_M) for a multiple M of the conductor.
    CyclotomicNumber lift(std::int64_t multiple) const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& q);
    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& q) { return a *= q; }
    CyclotomicNumber operator-() const { return *this * Rational(-1); }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

private:
    void reduce(std::vector<Rational> poly);
    void match(CyclotomicNumber& other);

    std::int64_t conductor_;
    std::vector<Rational> coords_;
};

std::string to_string(const CyclotomicNumber& c);

} // namespace loopblocks
