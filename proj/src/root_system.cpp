#include "loopblocks/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "loopblocks/error.hpp"

namespace loopblocks {

SimpleType make_simple_type(char family, int rank) {
    family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
    bool ok = false;
    switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B':
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 3; break;
    case 'E': ok = rank >= 6 && rank <= 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: throw DomainError(std::string("unknown Lie type family '") + family + "'");
    }
    if (!ok)
        throw DomainError("invalid rank " + std::to_string(rank) + " for type " + std::string(1, family));
    return SimpleType{family, rank};
}

SimpleType parse_simple_type(std::string_view text) {
    if (text.size() < 2) throw DomainError("malformed Lie type '" + std::string(text) + "'");
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])) || rank > 1000)
            throw DomainError("malformed Lie type '" + std::string(text) + "'");
        rank = rank * 10 + (text[i] - '0');
    }
    return make_simple_type(text[0], rank);
}

std::string to_string(const SimpleType& type) {
    return std::string(1, type.family) + std::to_string(type.rank);
}

Weight Weight::fundamental(int rank, int node) {
    Weight w = zero(rank);
    w.coords.at(static_cast<std::size_t>(node)) = 1;
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(coords.begin(), coords.end(), [](auto x) { return x >= 0; });
}

Weight& Weight::operator+=(const Weight& other) {
    if (other.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords[i] += other.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& other) {
    if (other.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coords[i] -= other.coords[i];
    return *this;
}

std::string to_string(const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w.coords[i]);
    }
    return s;
}

bool RootVector::is_integral() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string to_string(Dominance d) {
    switch (d) {
    case Dominance::greater: return "greater";
    case Dominance::less: return "less";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Gamma

std::int64_t GammaGroup::order() const {
    std::int64_t n = 1;
    for (auto d : invariant_factors) n *= d;
    return n;
}

Residue GammaGroup::project(const Weight& w) const {
    Residue r(invariant_factors.size(), 0);
    for (std::size_t k = 0; k < invariant_factors.size(); ++k) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < w.size(); ++j) v += projection[k][j] * w.coords[j];
        std::int64_t d = invariant_factors[k];
        r[k] = ((v % d) + d) % d;
    }
    return r;
}

Residue GammaGroup::add(const Residue& a, const Residue& b) const {
    Residue r(invariant_factors.size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = (a.at(k) + b.at(k)) % invariant_factors[k];
    return r;
}

Residue GammaGroup::scale(std::int64_t c, const Residue& a) const {
    Residue r(invariant_factors.size());
    for (std::size_t k = 0; k < r.size(); ++k) {
        std::int64_t d = invariant_factors[k];
        r[k] = (((c % d) * a.at(k)) % d + d) % d;
    }
    return r;
}

bool GammaGroup::is_valid(const Residue& r) const {
    if (r.size() != invariant_factors.size()) return false;
    for (std::size_t k = 0; k < r.size(); ++k)
        if (r[k] < 0 || r[k] >= invariant_factors[k]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Cartan data

IntMatrix cartan_matrix(const SimpleType& type) {
    const int n = type.rank;
    IntMatrix a = identity_matrix(static_cast<std::size_t>(n));
    for (auto& row : a)
        for (auto& x : row) x *= 2;
    auto bond = [&](int i, int j) { // 1-based simple bond
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (type.family) {
    case 'A':
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        break;
    case 'B':
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        a[n - 1][n - 2] = -2; // alpha_n short
        break;
    case 'C':
        for (int i = 1; i < n; ++i) bond(i, i + 1);
        a[n - 2][n - 1] = -2; // alpha_n long
        break;
    case 'D':
        for (int i = 1; i + 2 <= n - 1; ++i) bond(i, i + 1);
        bond(n - 2, n - 1);
        bond(n - 2, n);
        break;
    case 'E':
        bond(1, 3);
        bond(2, 4);
        for (int i = 3; i < n; ++i) bond(i, i + 1);
        break;
    case 'F':
        bond(1, 2);
        bond(2, 3);
        bond(3, 4);
        a[2][1] = -2; // alpha_3 short
        break;
    case 'G':
        bond(1, 2);
        a[0][1] = -3; // alpha_1 short
        break;
    default: throw DomainError("unknown type");
    }
    return a;
}

std::int64_t positive_root_count(const SimpleType& type) {
    const std::int64_t n = type.rank;
    switch (type.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    }
    throw DomainError("unknown type");
}

namespace {

// d_i = |alpha_i|^2 / 2 up to scale, with d_i a_ij = d_j a_ji, short roots = 1.
IntVector symmetrizer(const IntMatrix& a) {
    std::size_t n = a.size();
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        auto i = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || a[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * Rational(a[i][j]) / Rational(a[j][i]);
            queue.push_back(j);
        }
    }
    Rational smallest = *std::min_element(d.begin(), d.end());
    IntVector out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = to_int_checked(d[i] / smallest);
    return out;
}

RootVector integral_root(const IntVector& c) {
    RootVector r;
    for (auto x : c) r.coords.emplace_back(x);
    return r;
}

IntVector root_ints(const RootVector& r) {
    IntVector c;
    for (auto& q : r.coords) c.push_back(to_int_checked(q));
    return c;
}

std::int64_t height(const IntVector& c) {
    return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

// Closure of the simple roots under root strings: beta + alpha_i is a root iff
// q = p - <beta, alpha_i^vee> > 0 where p is the length of the downward string.
std::vector<IntVector> close_positive_roots(const IntMatrix& a) {
    std::size_t n = a.size();
    std::set<IntVector> roots;
    std::vector<IntVector> level;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        level.push_back(e);
        roots.insert(e);
    }
    while (!level.empty()) {
        std::set<IntVector> next;
        for (const auto& beta : level) {
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t pairing = 0;
                for (std::size_t j = 0; j < n; ++j) pairing += a[i][j] * beta[j];
                std::int64_t p = 0;
                IntVector down = beta;
                for (;;) {
                    down[i] -= 1;
                    if (!roots.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    IntVector up = beta;
                    up[i] += 1;
                    if (!roots.count(up)) next.insert(up);
                }
            }
        }
        level.assign(next.begin(), next.end());
        roots.insert(next.begin(), next.end());
    }
    std::vector<IntVector> out(roots.begin(), roots.end());
    std::sort(out.begin(), out.end(), [](const IntVector& x, const IntVector& y) {
        auto hx = height(x), hy = height(y);
        return hx != hy ? hx < hy : x < y;
    });
    return out;
}

void enumerate_compositions(int parts, std::int64_t total, IntVector& current,
                            const std::function<void(const IntVector&)>& visit) {
    if (static_cast<int>(current.size()) == parts - 1) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (std::int64_t x = total; x >= 0; --x) {
        current.push_back(x);
        enumerate_compositions(parts, total - x, current, visit);
        current.pop_back();
    }
}

} // namespace

RootSystem assemble_root_system(const SimpleType& type_in, std::optional<GammaGroup> gamma) {
    RootSystem rs;
    rs.type = make_simple_type(type_in.family, type_in.rank);
    rs.cartan = cartan_matrix(rs.type);
    rs.cartan_inverse = rational_inverse(rs.cartan);
    const std::size_t n = rs.cartan.size();

    rs.length_factors_ = symmetrizer(rs.cartan);
    rs.simply_laced = std::all_of(rs.length_factors_.begin(), rs.length_factors_.end(),
                                  [](auto d) { return d == 1; });

    // form on weights: A^{-T} B A^{-1}, B_ij = d_i a_ij, scaled to integers
    RationalMatrix form(n, std::vector<Rational>(n, 0));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Rational s = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s += rs.cartan_inverse[i][p] * Rational(rs.length_factors_[i] * rs.cartan[i][j]) *
                         rs.cartan_inverse[j][q];
            form[p][q] = s;
        }
    BigInt scale = 1;
    for (auto& row : form)
        for (auto& q : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    rs.form_matrix_.assign(n, IntVector(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) rs.form_matrix_[p][q] = to_int_checked(form[p][q] * scale);

    auto roots = close_positive_roots(rs.cartan);
    for (const auto& c : roots) {
        rs.positive_roots.push_back(integral_root(c));
        rs.root_weights_.push_back(rs.root_weight(rs.positive_roots.back()));
    }
    if (static_cast<std::int64_t>(roots.size()) != positive_root_count(rs.type))
        throw std::logic_error("root closure produced " + std::to_string(roots.size()) +
                               " positive roots for " + to_string(rs.type));

    rs.theta = rs.positive_roots.back();
    // theta_s: highest root among those with minimal length
    std::int64_t short_norm = 0;
    for (std::size_t k = 0; k < n; ++k) {
        Weight e = rs.simple_root_weight(static_cast<int>(k));
        auto norm = rs.form(e, e);
        if (short_norm == 0 || norm < short_norm) short_norm = norm;
    }
    for (std::size_t k = rs.positive_roots.size(); k-- > 0;) {
        const auto& w = rs.root_weights_[k];
        if (rs.form(w, w) == short_norm) {
            rs.theta_short = rs.positive_roots[k];
            break;
        }
    }

    rs.involution.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Weight w = rs.dominant_conjugate(-Weight::fundamental(static_cast<int>(n), static_cast<int>(i)));
        auto it = std::find(w.coords.begin(), w.coords.end(), 1);
        if (it == w.coords.end() || std::count(w.coords.begin(), w.coords.end(), 0) != static_cast<long>(n - 1))
            throw std::logic_error("-w0 did not map a fundamental weight to a fundamental weight");
        rs.involution[i] = static_cast<int>(it - w.coords.begin());
    }

    if (gamma) {
        rs.gamma = std::move(*gamma);
    } else {
        rs.gamma = gamma_group(rs);
    }
    return rs;
}

RootSystem build_root_system(const SimpleType& type) {
    return assemble_root_system(type, std::nullopt);
}

std::int64_t RootSystem::form(const Weight& a, const Weight& b) const {
    std::int64_t s = 0;
    for (std::size_t p = 0; p < a.size(); ++p) {
        if (a.coords[p] == 0) continue;
        for (std::size_t q = 0; q < b.size(); ++q) s += a.coords[p] * form_matrix_[p][q] * b.coords[q];
    }
    return s;
}

Weight RootSystem::root_weight(const RootVector& root) const {
    IntVector c = root_ints(root);
    return Weight(multiply(cartan, c));
}

Weight RootSystem::simple_root_weight(int index) const {
    IntVector w(cartan.size());
    for (std::size_t i = 0; i < cartan.size(); ++i) w[i] = cartan[i][static_cast<std::size_t>(index)];
    return Weight(std::move(w));
}

RootVector RootSystem::to_root_coords(const Weight& w) const {
    RootVector r;
    r.coords.assign(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) r.coords[i] += cartan_inverse[i][j] * w.coords[j];
    return r;
}

Weight RootSystem::reflect(const Weight& w, int index) const {
    Weight out = w;
    std::int64_t c = w.coords[static_cast<std::size_t>(index)];
    if (c == 0) return out;
    for (std::size_t k = 0; k < w.size(); ++k) out.coords[k] -= c * cartan[k][static_cast<std::size_t>(index)];
    return out;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
    Weight out = w;
    for (;;) {
        auto it = std::find_if(out.coords.begin(), out.coords.end(), [](auto x) { return x < 0; });
        if (it == out.coords.end()) return out;
        out = reflect(out, static_cast<int>(it - out.coords.begin()));
    }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
    std::set<Weight> seen{w};
    std::deque<Weight> queue{w};
    while (!queue.empty()) {
        Weight cur = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank(); ++i) {
            Weight next = reflect(cur, i);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

IntVector RootSystem::coroot_coords(const RootVector& root) const {
    Weight w = root_weight(root);
    // |beta|^2 / 2 in units where short simple roots have 1
    Rational half_norm = 0;
    for (std::size_t i = 0; i < w.size(); ++i) half_norm += root.coords[i] * length_factors_[i] * w.coords[i];
    half_norm /= 2;
    IntVector out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = to_int_checked(root.coords[i] * length_factors_[i] / half_norm);
    return out;
}

std::vector<IntVector> RootSystem::theta_coroot_orbit() const {
    IntVector start = coroot_coords(theta);
    std::set<IntVector> seen{start};
    std::deque<IntVector> queue{start};
    const std::size_t n = cartan.size();
    while (!queue.empty()) {
        IntVector h = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t alpha_i_of_h = 0;
            for (std::size_t j = 0; j < n; ++j) alpha_i_of_h += h[j] * cartan[j][i];
            if (alpha_i_of_h == 0) continue;
            IntVector next = h;
            next[i] -= alpha_i_of_h;
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------
// Operations

Dominance dominance_compare(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()) || mu.size() != lambda.size())
        throw DomainError("weight rank does not match root system " + to_string(rs.type));
    RootVector diff = rs.to_root_coords(lambda - mu);
    bool all_zero = true, nonneg = true, nonpos = true;
    for (const auto& c : diff.coords) {
        if (c.get_den() != 1) return Dominance::incomparable;
        if (c != 0) all_zero = false;
        if (c < 0) nonneg = false;
        if (c > 0) nonpos = false;
    }
    if (all_zero) return Dominance::equal;
    if (nonneg) return Dominance::greater;
    if (nonpos) return Dominance::less;
    return Dominance::incomparable;
}

GammaGroup gamma_skeleton(const IntMatrix& cartan) {
    // P/Q = Z^n / A Z^n; with L A R = D the map lambda -> L lambda mod D is an isomorphism.
    SmithForm snf = smith_normal_form(cartan);
    GammaGroup g;
    for (std::size_t k = 0; k < cartan.size(); ++k) {
        std::int64_t d = snf.diagonal[k][k];
        if (d == 0) throw std::logic_error("singular Cartan matrix");
        if (d > 1) {
            g.invariant_factors.push_back(d);
            g.projection.push_back(snf.left[k]);
        }
    }
    // lexicographic enumeration of residues
    g.elements.push_back(Residue{});
    for (auto d : g.invariant_factors) {
        std::vector<Residue> grown;
        for (const auto& prefix : g.elements)
            for (std::int64_t x = 0; x < d; ++x) {
                Residue r = prefix;
                r.push_back(x);
                grown.push_back(std::move(r));
            }
        g.elements = std::move(grown);
    }
    return g;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw DomainError("dominant_weights_below: weight " + to_string(lambda) + " is not dominant");
    // A^{-1} has nonnegative entries, so lambda - A c dominant forces c <= A^{-1} lambda.
    RootVector bound = rs.to_root_coords(lambda);
    const std::size_t n = lambda.size();
    IntVector limit(n);
    for (std::size_t i = 0; i < n; ++i) limit[i] = floor_to_int(bound.coords[i]);
    std::vector<Weight> out;
    IntVector c(n, 0);
    for (;;) {
        Weight w = lambda;
        for (std::size_t j = 0; j < n; ++j)
            if (c[j]) w -= c[j] * rs.simple_root_weight(static_cast<int>(j));
        if (w.is_dominant()) out.push_back(w);
        std::size_t k = 0;
        while (k < n && c[k] == limit[k]) c[k++] = 0;
        if (k == n) break;
        ++c[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_dominance_minimal(const RootSystem& rs, const Weight& w) {
    return dominant_weights_below(rs, w).size() == 1;
}

void find_minimal_representatives(const RootSystem& rs, GammaGroup& gamma) {
    const int n = rs.rank();
    std::map<Residue, Weight> found;
    found[gamma.zero()] = Weight::zero(n);
    for (std::int64_t total = 1; total <= n + 1 && found.size() < gamma.elements.size(); ++total) {
        IntVector current;
        enumerate_compositions(n, total, current, [&](const IntVector& coords) {
            Weight w(coords);
            Residue cls = gamma.project(w);
            if (found.count(cls)) return;
            if (is_dominance_minimal(rs, w)) found.emplace(cls, w);
        });
    }
    if (found.size() != gamma.elements.size())
        throw std::logic_error("minimal representative search bound exceeded for " + to_string(rs.type));
    gamma.minimal_reps.clear();
    for (const auto& e : gamma.elements) gamma.minimal_reps.push_back(found.at(e));
}

GammaGroup gamma_group(const RootSystem& rs) {
    GammaGroup g = gamma_skeleton(rs.cartan);
    find_minimal_representatives(rs, g);
    return g;
}

Weight minimal_representative(const RootSystem& rs, const Residue& gamma) {
    if (!rs.gamma.is_valid(gamma)) throw DomainError("malformed residue for Gamma of " + to_string(rs.type));
    auto it = std::find(rs.gamma.elements.begin(), rs.gamma.elements.end(), gamma);
    return rs.gamma.minimal_reps[static_cast<std::size_t>(it - rs.gamma.elements.begin())];
}

Weight dual_weight(const RootSystem& rs, const Weight& lambda) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("weight rank does not match root system " + to_string(rs.type));
    Weight out = Weight::zero(rs.rank());
    for (std::size_t i = 0; i < lambda.size(); ++i)
        out.coords[static_cast<std::size_t>(rs.involution[i])] = lambda.coords[i];
    return out;
}

std::int64_t r_lambda(const RootSystem& rs, const Weight& lambda) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError("weight rank does not match root system " + to_string(rs.type));
    if (lambda.is_zero()) throw DomainError("r_lambda is undefined for the zero weight");
    IntMatrix basis = hermite_normal_form(rs.theta_coroot_orbit());
    IntVector values;
    for (const auto& b : basis) {
        std::int64_t v = 0;
        for (std::size_t j = 0; j < b.size(); ++j) v += b[j] * lambda.coords[j];
        values.push_back(v);
    }
    return gcd_of(values);
}

} // namespace loopblocks
