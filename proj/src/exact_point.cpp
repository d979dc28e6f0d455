#include "loopblocks/exact_point.hpp"

#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

Rational reduce_phase(Rational phase) {
    phase.canonicalize();
    BigInt whole;
    mpz_fdiv_q(whole.get_mpz_t(), phase.get_num_mpz_t(), phase.get_den_mpz_t());
    return phase - Rational(whole);
}

} // namespace

ExactPoint::ExactPoint(Rational magnitude, Rational phase)
    : magnitude_(std::move(magnitude)), phase_(reduce_phase(std::move(phase))) {
    magnitude_.canonicalize();
    if (magnitude_ <= 0) throw DomainError("spectral point magnitude must be positive, got " + magnitude_.get_str());
}

ExactPoint ExactPoint::real(const Rational& value) {
    if (value == 0) throw DomainError("0 is not a point of C^x");
    return value > 0 ? ExactPoint(value, 0) : ExactPoint(-value, Rational(1, 2));
}

ExactPoint ExactPoint::root_of_unity(std::int64_t order, std::int64_t power) {
    if (order <= 0) throw DomainError("root of unity order must be positive");
    return ExactPoint(1, Rational(power) / Rational(order));
}

std::int64_t ExactPoint::phase_order() const {
    return phase_.get_den().get_si();
}

ExactPoint ExactPoint::inverse() const {
    return ExactPoint(1 / magnitude_, -phase_);
}

ExactPoint ExactPoint::pow(std::int64_t k) const {
    Rational m = 1;
    Rational base = k >= 0 ? magnitude_ : 1 / magnitude_;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) m *= base;
    return ExactPoint(m, phase_ * k);
}

ExactPoint operator*(const ExactPoint& a, const ExactPoint& b) {
    return ExactPoint(a.magnitude_ * b.magnitude_, a.phase_ + b.phase_);
}

std::string to_string(const ExactPoint& p) {
    if (p.phase() == 0) return p.magnitude().get_str();
    return p.magnitude().get_str() + "*e(" + p.phase().get_str() + ")";
}

} // namespace loopblocks
