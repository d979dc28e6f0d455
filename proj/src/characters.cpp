#include "loopblocks/characters.hpp"

#include <algorithm>
#include <stdexcept>

#include "loopblocks/error.hpp"

namespace loopblocks {

namespace {

void require_dominant(const RootSystem& rs, const Weight& lambda, const char* what) {
    if (lambda.size() != static_cast<std::size_t>(rs.rank()))
        throw DomainError(std::string(what) + ": weight rank does not match " + to_string(rs.type));
    if (!lambda.is_dominant())
        throw DomainError(std::string(what) + ": weight (" + to_string(lambda) + ") is not dominant");
}

Weight rho(int rank) {
    return Weight(IntVector(static_cast<std::size_t>(rank), 1));
}

// linear functional positive on every positive root: sum of simple-root coordinates
Rational height(const RootSystem& rs, const Weight& w) {
    Rational h = 0;
    for (const auto& c : rs.to_root_coords(w).coords) h += c;
    return h;
}

} // namespace

std::int64_t CharacterTable::dimension() const {
    std::int64_t d = 0;
    for (const auto& [w, m] : mult) d += m;
    return d;
}

std::int64_t weyl_dim(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "weyl_dim");
    Weight shifted = lambda + rho(rs.rank());
    Weight r = rho(rs.rank());
    BigInt num = 1, den = 1;
    for (const auto& alpha : rs.positive_root_weights()) {
        num *= static_cast<long>(rs.form(shifted, alpha));
        den *= static_cast<long>(rs.form(r, alpha));
    }
    if (num % den != 0) throw std::logic_error("Weyl dimension formula gave a non-integer");
    BigInt d = num / den;
    if (!d.fits_slong_p()) throw DomainError("dimension of V(" + to_string(lambda) + ") exceeds int64");
    return d.get_si();
}

CharacterTable freudenthal(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda, "freudenthal");
    std::vector<Weight> dominant = dominant_weights_below(rs, lambda);
    std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
        auto ha = height(rs, a), hb = height(rs, b);
        return ha != hb ? ha > hb : a < b;
    });

    WeightMultiset dom_mult;
    const Weight r = rho(rs.rank());
    const Weight top = lambda + r;
    const std::int64_t top_norm = rs.form(top, top);
    auto lookup = [&](const Weight& nu) -> std::int64_t {
        auto it = dom_mult.find(rs.dominant_conjugate(nu));
        return it == dom_mult.end() ? -1 : it->second;
    };

    for (const auto& mu : dominant) {
        if (mu == lambda) {
            dom_mult[mu] = 1;
            continue;
        }
        std::int64_t num = 0;
        for (const auto& alpha : rs.positive_root_weights()) {
            Weight nu = mu + alpha;
            for (;;) {
                std::int64_t m = lookup(nu);
                if (m < 0) break; // left the weight diagram; alpha-strings are unbroken
                num += m * rs.form(nu, alpha);
                nu += alpha;
            }
        }
        num *= 2;
        Weight shifted = mu + r;
        std::int64_t den = top_norm - rs.form(shifted, shifted);
        if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
        dom_mult[mu] = num / den;
    }

    CharacterTable table{lambda, {}};
    for (const auto& [mu, m] : dom_mult) {
        if (m == 0) continue;
        for (const auto& w : rs.weyl_orbit(mu)) table.mult[w] = m;
    }
    return table;
}

WeightMultiset character_product(const RootSystem& rs, const std::vector<Weight>& highest_weights) {
    WeightMultiset acc{{Weight::zero(rs.rank()), 1}};
    for (const auto& lambda : highest_weights) {
        require_dominant(rs, lambda, "character_product");
        CharacterTable factor = freudenthal(rs, lambda);
        WeightMultiset next;
        for (const auto& [a, ma] : acc)
            for (const auto& [b, mb] : factor.mult) next[a + b] += ma * mb;
        acc = std::move(next);
    }
    return acc;
}

WeightMultiset tensor_decompose(const RootSystem& rs, const std::vector<Weight>& highest_weights) {
    WeightMultiset remaining = character_product(rs, highest_weights);
    WeightMultiset result;
    while (!remaining.empty()) {
        auto top = std::max_element(remaining.begin(), remaining.end(), [&](const auto& a, const auto& b) {
            auto ha = height(rs, a.first), hb = height(rs, b.first);
            return ha != hb ? ha < hb : a.first < b.first;
        });
        Weight mu = top->first;
        std::int64_t count = top->second;
        if (!mu.is_dominant() || count <= 0) throw std::logic_error("character peeling reached a non-dominant top");
        result[mu] += count;
        for (const auto& [w, m] : freudenthal(rs, mu).mult) {
            auto it = remaining.find(w);
            if (it == remaining.end() || it->second < count * m)
                throw std::logic_error("character peeling went negative");
            it->second -= count * m;
            if (it->second == 0) remaining.erase(it);
        }
    }
    return result;
}

std::int64_t tensor_multiplicity(const RootSystem& rs, const std::vector<Weight>& highest_weights, const Weight& mu) {
    require_dominant(rs, mu, "tensor_multiplicity");
    auto decomposition = tensor_decompose(rs, highest_weights);
    auto it = decomposition.find(mu);
    return it == decomposition.end() ? 0 : it->second;
}

std::int64_t tensor_weight_multiplicity(const RootSystem& rs, const std::vector<Weight>& highest_weights,
                                        const Weight& mu) {
    if (mu.size() != static_cast<std::size_t>(rs.rank())) throw DomainError("weight rank mismatch");
    auto product = character_product(rs, highest_weights);
    auto it = product.find(mu);
    return it == product.end() ? 0 : it->second;
}

BigInt weyl_module_dim_type_A(const RootSystem& rs, const DrinfeldPoly& pi) {
    if (rs.type.family != 'A') throw DomainError("dimension formula implemented for type A only");
    if (pi.type() != rs.type) throw DomainError("Drinfeld polynomial type does not match root system");
    Weight lambda = pi_lambda(pi);
    BigInt dim = 1;
    const unsigned long n = static_cast<unsigned long>(rs.rank()) + 1;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, static_cast<unsigned long>(i + 1));
        BigInt power;
        mpz_pow_ui(power.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(lambda.coords[i]));
        dim *= power;
    }
    return dim;
}

} // namespace loopblocks
