#include "doctest.h"

#include <random>

#include "loopblocks/integer_matrix.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace loopblocks;
using namespace loopblocks::testing;

namespace {

IntMatrix random_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
    IntMatrix m(n, IntVector(n));
    for (auto& row : m)
        for (auto& x : row) x = uniform(rng, -bound, bound);
    return m;
}

bool is_unimodular(const IntMatrix& m) { return std::llabs(determinant(m)) == 1; }

} // namespace

TEST_CASE("determinant of small matrices") {
    CHECK(determinant({{2, -1}, {-1, 2}}) == 3);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(identity_matrix(5)) == 1);
}

TEST_CASE("rational inverse multiplies back to the identity") {
    IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
    auto inv = rational_inverse(a);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += Rational(a[i][k]) * inv[k][j];
            CHECK(s == (i == j ? 1 : 0));
        }
}

TEST_CASE("Smith form: L A R = D with unimodular transforms and a divisibility chain") {
    Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 4));
        IntMatrix a = random_matrix(rng, n, 6);
        auto snf = smith_normal_form(a);
        CHECK(multiply(multiply(snf.left, a), snf.right) == snf.diagonal);
        CHECK(is_unimodular(snf.left));
        CHECK(is_unimodular(snf.right));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) CHECK(snf.diagonal[i][j] == 0);
        for (std::size_t i = 0; i < n; ++i) CHECK(snf.diagonal[i][i] >= 0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto d = snf.diagonal[i][i];
            auto e = snf.diagonal[i + 1][i + 1];
            if (d == 0) CHECK(e == 0);
            else CHECK(e % d == 0);
        }
        IntVector nontrivial;
        for (std::size_t i = 0; i < n; ++i)
            if (snf.diagonal[i][i] > 1) nontrivial.push_back(snf.diagonal[i][i]);
        if (determinant(a) != 0) CHECK(nontrivial == invariant_factors_by_minors(a));
    }
}

TEST_CASE("Hermite form spans the same lattice and is idempotent") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 5));
        std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 4));
        IntMatrix a(rows, IntVector(cols));
        for (auto& row : a)
            for (auto& x : row) x = uniform(rng, -5, 5);
        IntMatrix h = hermite_normal_form(a);
        CHECK(hermite_normal_form(h) == h);
        // a unimodular change of generators leaves the form unchanged
        IntMatrix u = identity_matrix(rows);
        for (int step = 0; step < 6 && rows > 1; ++step) {
            auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(rows) - 1));
            auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(rows) - 1));
            if (i == j) continue;
            auto k = uniform(rng, -2, 2);
            for (std::size_t c = 0; c < rows; ++c) u[i][c] += k * u[j][c];
        }
        CHECK(hermite_normal_form(multiply(u, a)) == h);
        // echelon shape with positive pivots and reduced entries above them
        std::size_t last_pivot = 0;
        for (std::size_t r = 0; r < h.size(); ++r) {
            std::size_t p = 0;
            while (p < cols && h[r][p] == 0) ++p;
            REQUIRE(p < cols);
            if (r > 0) CHECK(p > last_pivot);
            CHECK(h[r][p] > 0);
            for (std::size_t above = 0; above < r; ++above) {
                CHECK(h[above][p] >= 0);
                CHECK(h[above][p] < h[r][p]);
            }
            last_pivot = p;
        }
    }
}

TEST_CASE("gcd of a vector") {
    CHECK(gcd_of({4, -6, 10}) == 2);
    CHECK(gcd_of({0, 0}) == 0);
    CHECK(gcd_of({-7}) == 7);
}
