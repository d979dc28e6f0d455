#include "doctest.h"

#include "loopblocks/drinfeld.hpp"
#include "loopblocks/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace loopblocks;
using namespace loopblocks::testing;

namespace {

const SimpleType A1 = make_simple_type('A', 1);
const SimpleType A2 = make_simple_type('A', 2);

std::vector<Rational> rational_values(const std::vector<CyclotomicNumber>& cs) {
    std::vector<Rational> out;
    for (const auto& c : cs) out.push_back(c.rational_value());
    return out;
}

/// Straight product of (1 - a u) over the roots, with its own conductor.
std::vector<CyclotomicNumber> expand_oracle(const std::vector<ExactPoint>& roots) {
    std::int64_t n = 1;
    for (const auto& a : roots) n = std::lcm(n, a.phase_order());
    std::vector<CyclotomicNumber> poly{CyclotomicNumber(n, 1)};
    for (const auto& a : roots) {
        std::vector<CyclotomicNumber> next(poly.size() + 1, CyclotomicNumber(n));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k] * CyclotomicNumber::from_point(n, a);
        }
        poly = next;
    }
    return poly;
}

} // namespace

TEST_CASE("generators and the free monoid") {
    auto g = pi_generator(A1, 1, pt(3));
    CHECK(g.support() == DrinfeldPoly::Support{{{1, pt(3)}, 1}});
    CHECK(pi_multiply(g, g).support() == DrinfeldPoly::Support{{{1, pt(3)}, 2}});
    CHECK(pi_generator(A1, 1, pt(3)) != pi_generator(A1, 1, pt(4)));
    CHECK(pi_multiply(g, DrinfeldPoly(A1)) == g);
    auto h = pi_multiply(pi_generator(A2, 1, pt(2)), pi_generator(A2, 2, pt(2)));
    CHECK(h.support() == DrinfeldPoly::Support{{{1, pt(2)}, 1}, {{2, pt(2)}, 1}});
    CHECK_THROWS_AS(pi_generator(A1, 2, pt(1)), DomainError);
    CHECK_THROWS_AS(pi_generator(A1, 0, pt(1)), DomainError);
    CHECK_THROWS_AS(pi_multiply(g, pi_generator(A2, 1, pt(1))), DomainError);
    CHECK_THROWS_AS(DrinfeldPoly(A1, {{{1, pt(1)}, 0}}), DomainError);
}

TEST_CASE("multiplication is commutative and associative") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto type = random_type(rng, 3);
        auto a = random_pi(rng, type, 4), b = random_pi(rng, type, 4), c = random_pi(rng, type, 4);
        CHECK(pi_multiply(a, b) == pi_multiply(b, a));
        CHECK(pi_multiply(pi_multiply(a, b), c) == pi_multiply(a, pi_multiply(b, c)));
    }
}

TEST_CASE("lambda_pi examples and the homomorphism property") {
    CHECK(pi_lambda(DrinfeldPoly(A2)).is_zero());
    CHECK(pi_lambda(pi_multiply(pi_generator(A1, 1, pt(1)), pi_generator(A1, 1, pt(-1)))) == w({2}));
    CHECK(pi_lambda(pi_multiply(pi_generator(A2, 1, pt(2)), pi_generator(A2, 2, pt(3)))) == w({1, 1}));
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        auto type = random_type(rng, 3);
        auto a = random_pi(rng, type, 4), b = random_pi(rng, type, 4);
        CHECK(pi_lambda(pi_multiply(a, b)) == pi_lambda(a) + pi_lambda(b));
    }
}

TEST_CASE("m(pi) examples") {
    CHECK(m_of_pi(pi_multiply(pi_generator(A1, 1, pt(1)), pi_generator(A1, 1, pt(-1)))) == 2);
    CHECK(m_of_pi(pi_generator(A1, 1, pt(1))) == 1);
    ExactPoint a(Rational(2, 3), Rational(1, 5));
    DrinfeldPoly three(A1);
    for (int k = 0; k < 3; ++k) three = pi_multiply(three, pi_generator(A1, 1, a * ExactPoint::root_of_unity(3, k)));
    CHECK(m_of_pi(three) == 3);
    auto coeffs = poly_coefficients(three, 1).plus_coeffs;
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[1].is_zero());
    CHECK(coeffs[2].is_zero());
    CHECK_FALSE(coeffs[3].is_zero());
    CHECK_THROWS_AS(m_of_pi(DrinfeldPoly(A1)), DomainError);
}

TEST_CASE("m(pi) agrees with the coefficient oracle") {
    Rng rng(33);
    for (int trial = 0; trial < 400; ++trial) {
        auto type = random_type(rng, 3);
        DrinfeldPoly pi = trial % 2 ? random_pi(rng, type, 5, 1)
                                    : rotation_invariant_pi(rng, type, uniform(rng, 1, 4), static_cast<int>(uniform(rng, 1, 2)));
        CAPTURE(to_string(type));
        CHECK(m_of_pi(pi) == m_by_coefficients(pi));
    }
}

TEST_CASE("m(pi) is invariant under scaling") {
    Rng rng(34);
    for (int trial = 0; trial < 300; ++trial) {
        auto type = random_type(rng, 3);
        auto pi = rotation_invariant_pi(rng, type, uniform(rng, 1, 4), 1);
        pi = pi_multiply(pi, random_pi(rng, type, trial % 3 == 0 ? 1 : 0));
        CHECK(m_of_pi(pi_scale(random_point(rng), pi)) == m_of_pi(pi));
    }
}

TEST_CASE("coprime factorization") {
    CHECK(coprime_factorize(DrinfeldPoly(A2)).empty());
    auto pi = pi_multiply(pi_multiply(pi_generator(A2, 1, pt(2)), pi_generator(A2, 2, pt(2))), pi_generator(A2, 1, pt(3)));
    auto factors = coprime_factorize(pi);
    CHECK(factors == std::vector<CoprimeFactor>{{w({1, 1}), pt(2)}, {w({1, 0}), pt(3)}});
    Rng rng(35);
    for (int trial = 0; trial < 300; ++trial) {
        auto type = random_type(rng, 3);
        auto p = random_pi(rng, type, 6);
        auto fs = coprime_factorize(p);
        CHECK(rebuild_from_factors(type, fs) == p);
        for (std::size_t k = 1; k < fs.size(); ++k) CHECK(fs[k - 1].point < fs[k].point);
        for (const auto& f : fs) CHECK_FALSE(f.weight.is_zero());
    }
}

TEST_CASE("scaling is a group action") {
    CHECK(pi_scale(pt(2), pi_generator(A1, 1, pt(2))) == pi_generator(A1, 1, pt(1)));
    Rng rng(36);
    for (int trial = 0; trial < 300; ++trial) {
        auto type = random_type(rng, 3);
        auto p = random_pi(rng, type, 5);
        auto a = random_point(rng), b = random_point(rng);
        CHECK(pi_scale(ExactPoint::one(), p) == p);
        CHECK(pi_scale(a, pi_scale(b, p)) == pi_scale(a * b, p));
        auto found = scale_relating(p, pi_scale(a, p));
        REQUIRE(found.has_value());
        CHECK(pi_scale(*found, p) == pi_scale(a, p));
    }
    CHECK_FALSE(scale_relating(pi_generator(A1, 1, pt(1)), pi_multiply(pi_generator(A1, 1, pt(1)), pi_generator(A1, 1, pt(2)))));
}

TEST_CASE("scaling divides coefficient k by a^k") {
    Rng rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto p = random_pi(rng, A1, 4, 1);
        auto a = random_point(rng);
        auto before = poly_coefficients(p, 1).plus_coeffs;
        auto after = poly_coefficients(pi_scale(a, p), 1).plus_coeffs;
        REQUIRE(before.size() == after.size());
        std::int64_t n = std::lcm(before[0].conductor(), std::lcm(after[0].conductor(), a.phase_order()));
        for (std::size_t k = 0; k < before.size(); ++k)
            CHECK(after[k] == before[k] * CyclotomicNumber::from_point(n, a.pow(-static_cast<std::int64_t>(k))));
    }
}

TEST_CASE("coefficient examples") {
    auto single = poly_coefficients(pi_generator(A1, 1, pt(2)), 1);
    CHECK(rational_values(single.plus_coeffs) == std::vector<Rational>{1, -2});
    CHECK(rational_values(single.minus_coeffs) == std::vector<Rational>{1, Rational(-1, 2)});
    auto empty = poly_coefficients(pi_generator(A2, 1, pt(2)), 2);
    CHECK(rational_values(empty.plus_coeffs) == std::vector<Rational>{1});
    CHECK(rational_values(empty.minus_coeffs) == std::vector<Rational>{1});
    auto pm = poly_coefficients(pi_multiply(pi_generator(A1, 1, pt(1)), pi_generator(A1, 1, pt(-1))), 1);
    CHECK(rational_values(pm.plus_coeffs) == std::vector<Rational>{1, 0, -1});
    CHECK_THROWS_AS(poly_coefficients(DrinfeldPoly(A1), 2), DomainError);
}

TEST_CASE("minus coefficients are the reversed polynomial normalized at zero") {
    // sum_k minus_k u^k = prod (1 - u / a)
    Rng rng(38);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_pi(rng, A1, 5);
        auto roots = p.roots(1);
        std::vector<ExactPoint> inverses;
        for (const auto& a : roots) inverses.push_back(a.inverse());
        auto expected = expand_oracle(inverses);
        auto got = poly_coefficients(p, 1);
        CHECK(got.minus_coeffs == expected);
        CHECK(got.plus_coeffs == expand_oracle(roots));
        CHECK(got.plus_coeffs.size() == roots.size() + 1);
    }
}

TEST_CASE("Newton identities reproduce the direct expansion") {
    CHECK(newton_coefficients({}) == std::vector<CyclotomicNumber>{CyclotomicNumber(1, 1)});
    CHECK(rational_values(newton_coefficients({pt(3)})) == std::vector<Rational>{1, -3});
    CHECK(rational_values(newton_coefficients({pt(1), pt(-1)})) == std::vector<Rational>{1, 0, -1});
    Rng rng(39);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ExactPoint> roots;
        auto size = uniform(rng, 0, 6);
        DrinfeldPoly p(A1);
        for (std::int64_t k = 0; k < size; ++k) {
            roots.push_back(random_point(rng));
            p = pi_multiply(p, pi_generator(A1, 1, roots.back()));
        }
        auto newton = newton_coefficients(roots);
        CHECK(newton == poly_coefficients(p, 1).plus_coeffs);
        CHECK(newton == expand_oracle(roots));
    }
}

TEST_CASE("dual weight of pi") {
    const auto& a2 = rs_of("A2");
    CHECK(dual_weight_of_pi(a2, pi_generator(A2, 1, pt(5))) == w({0, 1}));
    CHECK(dual_weight_of_pi(a2, DrinfeldPoly(A2)).is_zero());
    Rng rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_pi(rng, A1, 4);
        CHECK(dual_weight_of_pi(rs_of("A1"), p) == pi_lambda(p));
    }
    CHECK_THROWS_AS(dual_weight_of_pi(a2, DrinfeldPoly(A1)), DomainError);
}

TEST_CASE("either m(pi pi_{lambda,a}) = 1 or m(pi pi_{mu,a}) = 1 for lambda > mu and a outside supp pi") {
    Rng rng(41);
    int instances = 0;
    while (instances < 600) {
        auto type = random_type(rng, 3);
        const auto& rs = rs_of(type);
        auto pi = instances % 2 ? random_pi(rng, type, 5, 1)
                                : rotation_invariant_pi(rng, type, uniform(rng, 2, 4), static_cast<int>(uniform(rng, 1, 2)));
        auto a = random_point(rng);
        auto pts = pi.points();
        if (std::find(pts.begin(), pts.end(), a) != pts.end()) continue;
        Weight lambda = random_dominant(rng, rs.rank(), 3), mu = random_dominant(rng, rs.rank(), 3);
        if (dominance_compare(rs, lambda, mu) != Dominance::greater) continue;
        ++instances;
        auto m1 = m_of_pi(pi_multiply(pi, pi_lambda_at(type, lambda, a)));
        auto p2 = pi_multiply(pi, pi_lambda_at(type, mu, a));
        auto m2 = p2.is_one() ? 0 : m_of_pi(p2);
        CHECK((m1 == 1 || m2 == 1));
    }
}
