#include "loopblocks/rational.hpp"

#include <numeric>
#include <stdexcept>

#include "loopblocks/error.hpp"

namespace loopblocks {

std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw FormatError("empty rational literal");
    auto slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) start = 1;
        if (start >= part.size()) return false;
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw FormatError("malformed rational literal '" + s + "'");
    if (num[0] == '+') num = num.substr(1);
    BigInt n(num, 10), d(den, 10);
    if (d == 0) throw FormatError("zero denominator in '" + s + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::int64_t floor_to_int(const Rational& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!f.fits_slong_p()) throw std::overflow_error("rational floor exceeds int64");
    return f.get_si();
}

std::int64_t to_int_checked(const Rational& q) {
    if (q.get_den() != 1) throw std::logic_error("expected an integral rational, got " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer exceeds int64");
    return q.get_num().get_si();
}

std::int64_t lcm_int(std::int64_t a, std::int64_t b) {
    return std::lcm(a, b);
}

} // namespace loopblocks
