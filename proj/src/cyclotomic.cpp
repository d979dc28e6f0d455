#include "loopblocks/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

std::vector<BigInt> compute_cyclotomic(std::int64_t n) {
    // u^n - 1
    std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d) continue;
        const auto& divisor = cyclotomic_polynomial(d);
        // exact long division by a monic polynomial
        std::size_t dd = divisor.size() - 1;
        std::vector<BigInt> quotient(poly.size() - dd, 0);
        for (std::size_t k = poly.size(); k-- > dd;) {
            BigInt c = poly[k];
            quotient[k - dd] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j <= dd; ++j) poly[k - dd + j] -= c * divisor[j];
        }
        for (std::size_t j = 0; j < dd; ++j)
            if (poly[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
        poly = std::move(quotient);
    }
    return poly;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n) {
    if (n <= 0) throw DomainError("cyclotomic polynomial index must be positive");
    static std::mutex mutex;
    static std::map<std::int64_t, std::vector<BigInt>> table;
    {
        std::lock_guard lock(mutex);
        auto it = table.find(n);
        if (it != table.end()) return it->second;
    }
    auto poly = compute_cyclotomic(n); // recursive calls take the lock themselves
    std::lock_guard lock(mutex);
    return table.emplace(n, std::move(poly)).first->second;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t conductor, const Rational& value) : conductor_(conductor) {
    if (conductor <= 0) throw DomainError("cyclotomic conductor must be positive");
    coords_.assign(cyclotomic_polynomial(conductor).size() - 1, 0);
    coords_[0] = value;
}

CyclotomicNumber CyclotomicNumber::from_point(std::int64_t conductor, const ExactPoint& p) {
    Rational exponent = p.phase() * conductor;
    if (exponent.get_den() != 1)
        throw DomainError("conductor " + std::to_string(conductor) + " does not contain the phase of " + to_string(p));
    CyclotomicNumber c(conductor);
    std::vector<Rational> poly(static_cast<std::size_t>(exponent.get_num().get_si()) + 1, 0);
    poly.back() = p.magnitude();
    c.reduce(std::move(poly));
    return c;
}

void CyclotomicNumber::reduce(std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(conductor_);
    std::size_t deg = phi.size() - 1;
    for (std::size_t k = poly.size(); k-- > deg;) {
        if (poly[k] == 0) continue;
        Rational c = poly[k];
        for (std::size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg, 0);
    coords_ = std::move(poly);
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& q : coords_)
        if (q != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t k = 1; k < coords_.size(); ++k)
        if (coords_[k] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic number is not rational");
    return coords_[0];
}

CyclotomicNumber CyclotomicNumber::lift(std::int64_t multiple) const {
    if (multiple % conductor_ != 0)
        throw std::invalid_argument("lift target is not a multiple of the conductor");
    if (multiple == conductor_) return *this;
    std::size_t step = static_cast<std::size_t>(multiple / conductor_);
    std::vector<Rational> poly(coords_.size() * step + 1, 0);
    for (std::size_t k = 0; k < coords_.size(); ++k) poly[k * step] = coords_[k];
    CyclotomicNumber out(multiple);
    out.reduce(std::move(poly));
    return out;
}

void CyclotomicNumber::match(CyclotomicNumber& other) {
    if (other.conductor_ == conductor_) return;
    std::int64_t common = std::lcm(conductor_, other.conductor_);
    *this = lift(common);
    other = other.lift(common);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    CyclotomicNumber other = o;
    match(other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    CyclotomicNumber other = o;
    match(other);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    CyclotomicNumber other = o;
    match(other);
    std::vector<Rational> poly(coords_.size() * 2, 0);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coords_.size(); ++j) poly[i + j] += coords_[i] * other.coords_[j];
    }
    reduce(std::move(poly));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& q) {
    for (auto& c : coords_) c *= q;
    return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    CyclotomicNumber x = a, y = b;
    x.match(y);
    return x.coords_ == y.coords_;
}

std::string to_string(const CyclotomicNumber& c) {
    std::string s;
    for (std::size_t k = 0; k < c.coords().size(); ++k) {
        if (c.coords()[k] == 0) continue;
        if (!s.empty()) s += " + ";
        s += c.coords()[k].get_str();
        if (k) s += "*z^" + std::to_string(k);
    }
    if (s.empty()) s = "0";
    if (c.conductor() > 2) s += " (z=zeta_" + std::to_string(c.conductor()) + ")";
    return s;
}

} // namespace loopblocks
