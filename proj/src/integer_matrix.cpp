#include "loopblocks/integer_matrix.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace loopblocks {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix out(a.size(), IntVector(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

IntVector multiply(const IntMatrix& a, const IntVector& v) {
    IntVector out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), IntVector(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

RationalMatrix rational_inverse(const IntMatrix& a) {
    std::size_t n = a.size();
    RationalMatrix work(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("rational_inverse: matrix not square");
        for (std::size_t j = 0; j < n; ++j) work[i][j] = Rational(a[i][j]);
        work[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work[pivot][col] == 0) ++pivot;
        if (pivot == n) throw std::invalid_argument("rational_inverse: singular matrix");
        std::swap(work[pivot], work[col]);
        Rational inv = 1 / work[col][col];
        for (auto& x : work[col]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || work[r][col] == 0) continue;
            Rational f = work[r][col];
            for (std::size_t j = 0; j < 2 * n; ++j) work[r][j] -= f * work[col][j];
        }
    }
    RationalMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = work[i][n + j];
    return inv;
}

std::int64_t determinant(const IntMatrix& a) {
    // Bareiss fraction-free elimination.
    std::size_t n = a.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a[i][j]);
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1] * sign;
    return det.get_si();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor) {
    for (std::size_t j = 0; j < m[target].size(); ++j) m[target][j] += factor * m[source][j];
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, std::int64_t factor) {
    for (auto& row : m) row[target] += factor * row[source];
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    std::size_t rows = input.size();
    std::size_t cols = rows ? input[0].size() : 0;
    SmithForm f{input, identity_matrix(rows), identity_matrix(cols)};
    IntMatrix& d = f.diagonal;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (d[i][j] != 0 && (pr == rows || std::llabs(d[i][j]) < std::llabs(d[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows) return f;
            swap_rows(d, t, pr);
            swap_rows(f.left, t, pr);
            swap_cols(d, t, pc);
            swap_cols(f.right, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                std::int64_t q = d[i][t] / d[t][t];
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(f.left, i, t, -q);
                }
                if (d[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                std::int64_t q = d[t][j] / d[t][t];
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(f.right, j, t, -q);
                }
                if (d[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // enforce d_t | every trailing entry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        add_row(d, t, i, 1);
                        add_row(f.left, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d[t][t] < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : f.left[t]) x = -x;
        }
    }
    return f;
}

IntMatrix hermite_normal_form(const IntMatrix& input) {
    IntMatrix m = input;
    if (m.empty()) return m;
    std::size_t cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < m.size(); ++c) {
        // Euclid on column c among rows >= pivot_row
        for (;;) {
            std::size_t best = m.size();
            for (std::size_t r = pivot_row; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || std::llabs(m[r][c]) < std::llabs(m[best][c])))
                    best = r;
            if (best == m.size()) break;
            std::swap(m[pivot_row], m[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < m.size(); ++r) {
                if (m[r][c] == 0) continue;
                std::int64_t q = m[r][c] / m[pivot_row][c];
                add_row(m, r, pivot_row, -q);
                if (m[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[pivot_row][c] == 0) continue;
        if (m[pivot_row][c] < 0)
            for (auto& x : m[pivot_row]) x = -x;
        for (std::size_t r = 0; r < pivot_row; ++r) {
            std::int64_t p = m[pivot_row][c];
            std::int64_t q = m[r][c] / p;
            if (m[r][c] - q * p < 0) --q;
            if (q != 0) add_row(m, r, pivot_row, -q);
        }
        ++pivot_row;
    }
    m.resize(pivot_row);
    return m;
}

std::int64_t gcd_of(const IntVector& values) {
    std::int64_t g = 0;
    for (auto v : values) g = std::gcd(g, v);
    return g;
}

} // namespace loopblocks
