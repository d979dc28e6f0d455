#pragma once

#include <cstdint>
#include <string>

#include "loopblocks/rational.hpp"

namespace loopblocks {

/// Element of the subgroup Q_{>0} x (Q/Z) of C^x: magnitude * exp(2 pi i phase).
/// Ordered lexicographically by (magnitude, phase).
class ExactPoint {
public:
    ExactPoint() : magnitude_(1), phase_(0) {}

    /// Throws DomainError unless magnitude > 0; the phase is reduced into [0, 1).
    ExactPoint(Rational magnitude, Rational phase);

    static ExactPoint one() { return {}; }
    static ExactPoint real(const Rational& value); // any nonzero rational, sign folded into the phase
    static ExactPoint root_of_unity(std::int64_t order, std::int64_t power = 1);

    const Rational& magnitude() const { return magnitude_; }
    const Rational& phase() const { return phase_; }

    /// Denominator of the phase: the smallest N with this point in Q_{>0} * mu_N.
    std::int64_t phase_order() const;

    ExactPoint inverse() const;
    ExactPoint pow(std::int64_t k) const;

    friend ExactPoint operator*(const ExactPoint& a, const ExactPoint& b);
    friend ExactPoint operator/(const ExactPoint& a, const ExactPoint& b) { return a * b.inverse(); }

    friend bool operator==(const ExactPoint& a, const ExactPoint& b) {
        return a.magnitude_ == b.magnitude_ && a.phase_ == b.phase_;
    }
    friend bool operator<(const ExactPoint& a, const ExactPoint& b) {
        if (a.magnitude_ != b.magnitude_) return a.magnitude_ < b.magnitude_;
        return a.phase_ < b.phase_;
    }
    friend bool operator!=(const ExactPoint& a, const ExactPoint& b) { return !(a == b); }
    friend bool operator>(const ExactPoint& a, const ExactPoint& b) { return b < a; }

private:
    Rational magnitude_;
    Rational phase_;
};

std::string to_string(const ExactPoint& p);

} // namespace loopblocks
