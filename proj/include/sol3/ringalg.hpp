#pragma once

// Graded-commutative F_2-algebras given by generators (degree 1 or 2) and
// homogeneous relations, evaluated through degree 3.
//
// Degree-n component = span(monomials of degree n) / span(m * r) over
// monomials m and relations r with deg(m) + deg(r) = n. Monomials are
// listed in graded lexicographic order by generator index (higher powers
// of earlier generators first); the reduction pivots on the latest monomial,
// so quotient bases consist of the earliest monomials.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sol3/intlat.hpp"

namespace sol3 {

struct RingGenerator {
    std::string name;
    int degree = 1;
};

using Monomial = std::vector<std::uint8_t>;  // exponent per generator

/// Sum of distinct monomials (coefficients in F_2).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Monomial m) { toggle(std::move(m)); }

    void toggle(const Monomial& m);
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial operator*(const Polynomial& rhs) const;

    bool is_zero() const { return terms_.empty(); }
    const std::set<Monomial>& terms() const { return terms_; }
    bool operator==(const Polynomial&) const = default;

private:
    std::set<Monomial> terms_;
};

struct GradedRingF2 {
    std::vector<RingGenerator> generators;
    std::vector<Polynomial> relations;

    /// Relations written as "rho*psi + sigma^2"; terms joined by '+',
    /// factors by '*', powers by '^'.
    static GradedRingF2 parse(std::vector<RingGenerator> generators, const std::vector<std::string>& relations);

    Polynomial parse_polynomial(const std::string& text) const;
    int degree(const Monomial& m) const;
    std::string format(const Monomial& m) const;
    std::string format(const Polynomial& p) const;
    std::vector<std::string> relation_strings() const;

    /// Monomials of total degree n in canonical order.
    std::vector<Monomial> monomials(int degree) const;

    /// Same ring with generators renamed by `permutation` applied to names:
    /// generator i now plays the role of generator permutation[i].
    GradedRingF2 relabel(const std::vector<int>& permutation) const;
};

struct StructureConstants {
    std::array<int, 4> dims{};
    std::array<std::vector<std::string>, 4> bases;
    // Coordinates over the degree-2 (resp. degree-3) basis.
    std::vector<std::vector<f2::Vec>> mul12;  // H^1 x H^1 -> H^2
    std::vector<std::vector<f2::Vec>> mul13;  // H^1 x H^2 -> H^3
    // Nonzero H^1 coordinate vector -> its cube (filled when dims[3] == 1).
    std::map<f2::Vec, int> cube;

    f2::Vec product11(f2::Vec x, f2::Vec y) const;
    f2::Vec product12(f2::Vec x, f2::Vec h2) const;
    f2::Vec cube_of(f2::Vec x) const;
    /// mu(i,j,k) = coefficient of phi_i phi_j phi_k on the top class.
    int triple(int i, int j, int k) const;
};

/// Throws Error(NonHomogeneous) for mixed-degree relations.
StructureConstants normalize(const GradedRingF2& ring);

/// Span of { m * r } inside the degree-n monomials.
f2::Subspace ideal_component(const GradedRingF2& ring, int degree);

/// True when both rings (same generator list) have the same ideal in every
/// degree up to `max_degree`.
bool same_ideal(const GradedRingF2& lhs, const GradedRingF2& rhs, int max_degree = 3);

/// Nondegeneracy of H^1 x H^2 -> H^3; false as well when dims are not
/// (1, b, b, 1). Throws Error(BadDims) for malformed constants.
bool pd_check(const StructureConstants& sc);

/// w alpha beta == alpha^2 beta + alpha beta^2 on all basis pairs.
bool wu_check(const StructureConstants& sc, f2::Vec w);

/// (alpha beta) gamma == alpha (beta gamma) on all basis triples.
bool associativity_check(const StructureConstants& sc);

/// Cube of every nonzero H^1 class. Throws Error(BadDims) unless dims[3] == 1.
std::map<f2::Vec, int> cube_table(const StructureConstants& sc);

/// Index pairs (i <= j) and triples (i <= j <= k) over k basis classes, in
/// the same order as the degree-2 / degree-3 monomials of k degree-1
/// generators.
std::vector<std::pair<int, int>> symmetric_pairs(int k);
std::vector<std::array<int, 3>> symmetric_triples(int k);

/// Kernel of the cup product on the symmetric square of H^1, as a subspace
/// over symmetric_pairs(dims[1]) coordinates.
f2::Subspace square_kernel(const StructureConstants& sc);

/// Pretty form of a symmetric-square vector, e.g. "rho*psi + sigma^2".
std::string format_pair_vector(f2::Vec v, const std::vector<std::string>& names);

}  // namespace sol3
