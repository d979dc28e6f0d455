#include "doctest.h"

#include <algorithm>
#include <set>

#include "loopblocks/characters.hpp"
#include "loopblocks/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace loopblocks;
using namespace loopblocks::testing;

namespace {

std::vector<SimpleType> small_types() {
    std::vector<SimpleType> out;
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}) out.push_back(parse_simple_type(name));
    return out;
}

/// Dominant weights of the given rank with dimension at most the bound.
std::vector<Weight> dominant_up_to_dim(const RootSystem& rs, std::int64_t bound) {
    std::vector<Weight> out;
    std::vector<Weight> frontier{Weight::zero(rs.rank())};
    std::set<Weight> seen(frontier.begin(), frontier.end());
    while (!frontier.empty()) {
        Weight v = frontier.back();
        frontier.pop_back();
        out.push_back(v);
        for (int i = 0; i < rs.rank(); ++i) {
            Weight next = v + Weight::fundamental(rs.rank(), i);
            if (seen.count(next) || weyl_dim(rs, next) > bound) continue;
            seen.insert(next);
            frontier.push_back(next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Character product by direct convolution of weight multisets.
WeightMultiset convolve(const WeightMultiset& a, const WeightMultiset& b) {
    WeightMultiset out;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) out[x + y] += m * n;
    return out;
}

} // namespace

TEST_CASE("Weyl dimension examples") {
    for (std::int64_t m = 0; m <= 6; ++m) CHECK(weyl_dim(rs_of("A1"), w({m})) == m + 1);
    CHECK(weyl_dim(rs_of("A2"), w({1, 1})) == 8);
    CHECK(weyl_dim(rs_of("G2"), w({0, 1})) == 14);
    CHECK(weyl_dim(rs_of("G2"), w({1, 0})) == 7);
    CHECK(weyl_dim(rs_of("E8"), w({0, 0, 0, 0, 0, 0, 0, 1})) == 248);
    CHECK(weyl_dim(rs_of("E6"), w({1, 0, 0, 0, 0, 0})) == 27);
    CHECK(weyl_dim(rs_of("F4"), w({0, 0, 0, 1})) == 26);
    CHECK(weyl_dim(rs_of("B3"), w({0, 0, 1})) == 8);
    CHECK_THROWS_AS(weyl_dim(rs_of("A2"), w({1, -1})), DomainError);
}

TEST_CASE("Freudenthal examples") {
    auto t = freudenthal(rs_of("A1"), w({4}));
    CHECK(t.mult.size() == 5);
    for (const auto& [mu, m] : t.mult) CHECK(m == 1);
    auto adj = freudenthal(rs_of("A2"), w({1, 1}));
    CHECK(adj.at(w({0, 0})) == 2);
    CHECK(adj.dimension() == 8);
}

TEST_CASE("Freudenthal agrees with the alternating-sum oracle") {
    for (const auto& type : small_types()) {
        const auto& rs = rs_of(type);
        for (const auto& lambda : dominant_up_to_dim(rs, 200)) {
            auto table = freudenthal(rs, lambda);
            CAPTURE(to_string(type));
            CAPTURE(to_string(lambda));
            for (const auto& mu : dominant_weights_below(rs, lambda))
                CHECK(table.at(mu) == kostant_multiplicity(rs, lambda, mu));
        }
    }
}

TEST_CASE("character tables: totals, Weyl invariance, highest weight line") {
    for (const auto& type : small_types()) {
        const auto& rs = rs_of(type);
        for (const auto& lambda : dominant_up_to_dim(rs, 1000)) {
            auto table = freudenthal(rs, lambda);
            CHECK(table.highest == lambda);
            CHECK(table.at(lambda) == 1);
            CHECK(table.dimension() == weyl_dim(rs, lambda));
            for (const auto& [mu, m] : table.mult) {
                CHECK(m > 0);
                CHECK(table.at(rs.dominant_conjugate(mu)) == m);
            }
        }
    }
}

TEST_CASE("every dominant weight below lambda occurs in V(lambda)") {
    for (const auto& type : small_types()) {
        const auto& rs = rs_of(type);
        for (const auto& lambda : dominant_up_to_dim(rs, 1000)) {
            auto table = freudenthal(rs, lambda);
            for (const auto& mu : dominant_weights_below(rs, lambda)) CHECK(table.at(mu) >= 1);
        }
    }
}

TEST_CASE("tensor decomposition examples") {
    const auto& a1 = rs_of("A1");
    CHECK(tensor_decompose(a1, {w({1}), w({1})}) == WeightMultiset{{w({0}), 1}, {w({2}), 1}});
    CHECK(tensor_decompose(a1, {w({3}), w({0})}) == WeightMultiset{{w({3}), 1}});
    const auto& a2 = rs_of("A2");
    CHECK(tensor_decompose(a2, {w({1, 0}), w({0, 1})}) == WeightMultiset{{w({0, 0}), 1}, {w({1, 1}), 1}});
    CHECK(tensor_multiplicity(a2, {w({1, 1}), w({1, 1})}, w({1, 1})) == 2);
    CHECK(tensor_weight_multiplicity(a1, {w({1}), w({1})}, w({0})) == 2);
    CHECK_THROWS_AS(tensor_decompose(a2, {w({-1, 0})}), DomainError);
}

TEST_CASE("tensor products conserve dimension and match convolution") {
    Rng rng(61);
    for (int trial = 0; trial < 120; ++trial) {
        const auto& rs = rs_of(random_type(rng, 3));
        std::vector<Weight> factors;
        for (std::int64_t k = uniform(rng, 1, 3); k > 0; --k) factors.push_back(random_dominant(rng, rs.rank(), 1));
        std::int64_t product = 1;
        WeightMultiset expected{{Weight::zero(rs.rank()), 1}};
        for (const auto& f : factors) {
            product *= weyl_dim(rs, f);
            expected = convolve(expected, freudenthal(rs, f).mult);
        }
        if (product > 3000) continue;
        CHECK(character_product(rs, factors) == expected);
        std::int64_t total = 0;
        WeightMultiset rebuilt;
        for (const auto& [mu, m] : tensor_decompose(rs, factors)) {
            CHECK(m > 0);
            total += m * weyl_dim(rs, mu);
            for (const auto& [nu, k] : freudenthal(rs, mu).mult) rebuilt[nu] += m * k;
        }
        CHECK(total == product);
        CHECK(rebuilt == expected);
    }
}

TEST_CASE("type A Weyl module dimension matches the sl2 construction") {
    CHECK(sl2_local_weyl_module_dim(0) == 1);
    CHECK(sl2_local_weyl_module_dim(1) == 2);
    CHECK(sl2_local_weyl_module_dim(2) == 4);
    CHECK(sl2_local_weyl_module_dim(3) == 8);
    const auto& a1 = rs_of("A1");
    const SimpleType A1 = a1.type;
    for (int m = 0; m <= 3; ++m) {
        auto pi = pi_lambda_at(A1, w({m}), pt(1));
        CHECK(weyl_module_dim_type_A(a1, pi) == sl2_local_weyl_module_dim(m));
    }
}

TEST_CASE("type A Weyl module dimension: closed form, scale invariance, fundamental products") {
    const auto& a3 = rs_of("A3");
    CHECK(weyl_module_dim_type_A(a3, DrinfeldPoly(a3.type)) == 1);
    CHECK(weyl_module_dim_type_A(a3, pi_lambda_at(a3.type, w({1, 2, 0}), pt(2))) == BigInt(4 * 36));
    CHECK_THROWS_AS(weyl_module_dim_type_A(rs_of("B2"), DrinfeldPoly(make_simple_type('B', 2))), DomainError);
    Rng rng(62);
    for (int trial = 0; trial < 150; ++trial) {
        const auto& rs = rs_of(make_simple_type('A', static_cast<int>(uniform(rng, 1, 4))));
        auto pi = random_pi(rng, rs.type, 5);
        CHECK(weyl_module_dim_type_A(rs, pi) == weyl_module_dim_type_A(rs, pi_scale(random_point(rng), pi)));
        std::int64_t tensor_dim = 1;
        bool fundamental_free = true;
        for (const auto& f : coprime_factorize(pi)) {
            tensor_dim *= weyl_dim(rs, f.weight);
            for (auto c : f.weight.coords) fundamental_free &= (c <= 1);
        }
        CHECK(weyl_module_dim_type_A(rs, pi) >= tensor_dim);
        if (fundamental_free) {
            // products of distinct fundamentals at distinct points
            bool each_single = true;
            for (const auto& f : coprime_factorize(pi)) {
                std::int64_t s = 0;
                for (auto c : f.weight.coords) s += c;
                each_single &= (s == 1);
            }
            if (each_single) CHECK(weyl_module_dim_type_A(rs, pi) == tensor_dim);
        }
    }
}
