#pragma once

// Finite root systems of simple Lie algebras, built exactly from the Cartan
// matrix. Nodes follow Bourbaki numbering; node i (1-based in user-facing
// formats) is coordinate i-1 of every vector below.
//
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n        (alpha_n short)
//   C_n  1 - 2 - ... - (n-1) <= n        (alpha_n long)
//   D_n  1 - 2 - ... - (n-2) < (n-1), n  (n-1 and n both attached to n-2)
//   E_n  1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
//   F_4  1 - 2 => 3 - 4                  (alpha_1, alpha_2 long)
//   G_2  1 <= 2                          (alpha_1 short)

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "loopblocks/integer_matrix.hpp"
#include "loopblocks/rational.hpp"

namespace loopblocks {

struct SimpleType {
    char family = 'A';
    int rank = 1;

    auto operator<=>(const SimpleType&) const = default;
};

/// Throws DomainError if the rank is not admissible for the family.
SimpleType make_simple_type(char family, int rank);

/// Parses "A2", "E8", "g2" and similar.
SimpleType parse_simple_type(std::string_view text);
std::string to_string(const SimpleType& type);

/// Integral weight in the fundamental-weight basis: coords[i] = lambda(alpha_i^vee).
struct Weight {
    IntVector coords;

    Weight() = default;
    explicit Weight(IntVector c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(IntVector(static_cast<std::size_t>(rank), 0)); }
    static Weight fundamental(int rank, int node);

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;
    bool is_dominant() const;

    Weight& operator+=(const Weight& other);
    Weight& operator-=(const Weight& other);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(std::int64_t k, Weight a) {
        for (auto& x : a.coords) x *= k;
        return a;
    }
    Weight operator-() const { return std::int64_t{-1} * *this; }

    auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

/// Element of the rational span of the simple roots, in the simple-root basis.
struct RootVector {
    std::vector<Rational> coords;

    bool is_integral() const;
    bool operator==(const RootVector&) const = default;
};

/// Residue coordinates of an element of Gamma = P/Q, one entry per invariant factor.
using Residue = IntVector;

struct GammaGroup {
    IntVector invariant_factors;     // d_1 | d_2 | ..., each > 1
    IntMatrix projection;            // one row per invariant factor, applied to weight coords
    std::vector<Residue> elements;   // all residues, lexicographic
    std::vector<Weight> minimal_reps; // minimal_reps[k] represents elements[k]

    std::int64_t order() const;
    Residue project(const Weight& w) const;
    Residue zero() const { return Residue(invariant_factors.size(), 0); }
    Residue add(const Residue& a, const Residue& b) const;
    Residue scale(std::int64_t k, const Residue& a) const;
    bool is_valid(const Residue& r) const;
};

enum class Dominance { greater, less, equal, incomparable };

std::string to_string(Dominance d);

class RootSystem {
public:
    SimpleType type;
    IntMatrix cartan;                 // cartan[i][j] = <alpha_i^vee, alpha_j>
    RationalMatrix cartan_inverse;
    std::vector<RootVector> positive_roots; // sorted by height, then lexicographically
    RootVector theta;
    RootVector theta_short;
    std::vector<int> involution;      // -w_0 as a node permutation (0-based)
    bool simply_laced = true;
    GammaGroup gamma;

    int rank() const { return type.rank; }

    /// Half squared lengths of the simple roots, normalized so short roots have 1.
    const IntVector& root_length_factors() const { return length_factors_; }

    /// Positive roots expressed in the fundamental-weight basis.
    const std::vector<Weight>& positive_root_weights() const { return root_weights_; }

    /// Integer-valued multiple of the invariant form on weights (same multiple throughout).
    std::int64_t form(const Weight& a, const Weight& b) const;

    Weight root_weight(const RootVector& root) const;
    Weight simple_root_weight(int index) const;

    /// Simple-root coordinates of a weight.
    RootVector to_root_coords(const Weight& w) const;

    Weight reflect(const Weight& w, int index) const;
    Weight dominant_conjugate(const Weight& w) const;
    std::vector<Weight> weyl_orbit(const Weight& w) const;

    /// Coroot of a positive root in the simple-coroot basis.
    IntVector coroot_coords(const RootVector& root) const;

    /// Orbit of theta^vee under W, in the simple-coroot basis, sorted.
    std::vector<IntVector> theta_coroot_orbit() const;

    Residue gamma_class(const Weight& w) const { return gamma.project(w); }

private:
    friend RootSystem assemble_root_system(const SimpleType& type, std::optional<GammaGroup> gamma);

    IntVector length_factors_;
    std::vector<Weight> root_weights_;
    IntMatrix form_matrix_;
};

IntMatrix cartan_matrix(const SimpleType& type);

/// Closed-form number of positive roots for the type.
std::int64_t positive_root_count(const SimpleType& type);

RootSystem build_root_system(const SimpleType& type);

/// Builds everything from the Cartan matrix; a supplied Gamma table (from a
/// cache) is used as-is instead of being recomputed.
RootSystem assemble_root_system(const SimpleType& type, std::optional<GammaGroup> gamma);

Dominance dominance_compare(const RootSystem& rs, const Weight& lambda, const Weight& mu);

GammaGroup gamma_group(const RootSystem& rs);

/// Computes invariant factors and projection only; minimal representatives are left empty.
GammaGroup gamma_skeleton(const IntMatrix& cartan);

/// Fills the minimal representative table of a skeleton by bounded search over
/// dominant weights of coordinate sum <= rank + 1. Throws std::logic_error if
/// the bound is insufficient.
void find_minimal_representatives(const RootSystem& rs, GammaGroup& gamma);

/// True iff no dominant weight other than w itself lies below w.
bool is_dominance_minimal(const RootSystem& rs, const Weight& w);

Weight minimal_representative(const RootSystem& rs, const Residue& gamma);

Weight dual_weight(const RootSystem& rs, const Weight& lambda);

std::int64_t r_lambda(const RootSystem& rs, const Weight& lambda);

/// Dominant weights lambda' with lambda' <= lambda.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

} // namespace loopblocks
