#pragma once

// The two families of closed Sol^3-manifold groups and their elementary
// invariants.
//
//   MappingTorus(a,b,c,d):  <t,x,y | t x t^-1 = x^a y^b, t y t^-1 = x^c y^d, xy = yx>
//   TwistedUnion(a,b,c,d):  <u,v,y | u y u^-1 = y^-1, v^2 = u^2a y^b,
//                                    v u^2c y^d v^-1 = u^-2c y^-d>

#include <optional>
#include <string>
#include <vector>

#include "sol3/intlat.hpp"

namespace sol3 {

enum class Family { MappingTorus, TwistedUnion };

const char* to_string(Family family);
Family parse_family(const std::string& text);  // "mapping-torus" | "union"

struct SolGroupSpec {
    Family family = Family::MappingTorus;
    Int a = 0;
    Int b = 0;
    Int c = 0;
    Int d = 0;

    Mat2Z matrix() const { return {a, b, c, d}; }
    bool operator==(const SolGroupSpec&) const = default;

    static SolGroupSpec mapping_torus(Int a, Int b, Int c, Int d)
    {
        return {Family::MappingTorus, a, b, c, d};
    }
    static SolGroupSpec twisted_union(Int a, Int b, Int c, Int d)
    {
        return {Family::TwistedUnion, a, b, c, d};
    }

    std::string to_string() const;
};

struct Syllable {
    int generator = 0;
    Int exponent = 0;
};

using Word = std::vector<Syllable>;

struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    /// Row i holds the exponent sums of relator i on each generator.
    IntMatrix abelianized() const;
};

Presentation presentation(const SolGroupSpec& spec);

/// One F_2 homomorphism from the group, given by its values on the
/// presentation generators (bit g = value on generator g).
struct H1Class {
    std::string name;
    f2::Vec values = 0;
};

/// Ordered basis of Hom(pi, F_2). Classes elsewhere are written as
/// coordinate vectors over this basis (bit i = coefficient of basis[i]).
struct H1Basis {
    std::vector<H1Class> classes;

    std::size_t size() const { return classes.size(); }
    /// Values on generators of the class with the given basis coordinates.
    f2::Vec evaluate(f2::Vec coords) const;
    /// Human-readable name, e.g. "rho+sigma".
    std::string name_of(f2::Vec coords) const;
};

struct GroupInvariants {
    int epsilon = 1;  // det of the gluing matrix
    Int tau = 0;      // trace of the gluing matrix
    // Mapping torus only.
    std::optional<Int> delta1;
    std::optional<Int> delta2;
    std::optional<int> k;  // v_2(delta1), when delta2 is even
    std::optional<int> l;  // v_2(delta2), when delta2 is even
    bool orientable = true;
    AbelianGroup abelianization;
    int beta = 0;       // dim H^1(pi; F_2)
    f2::Vec w1 = 0;     // coordinates over h1_basis(spec)
};

/// Throws Error(NotSol) / Error(NotUnion) for inputs outside the families.
GroupInvariants validate(const SolGroupSpec& spec);

/// Checks the input predicates only.
bool is_valid(const SolGroupSpec& spec);

/// Abelianization from the closed formula for the family.
AbelianGroup abelianization_closed_form(const SolGroupSpec& spec);
/// Abelianization from the Smith form of the abelianized relators.
AbelianGroup abelianization_smith(const SolGroupSpec& spec);
/// Both routes; throws std::logic_error when they differ.
AbelianGroup abelianization(const SolGroupSpec& spec);

H1Basis h1_basis(const SolGroupSpec& spec);

/// True iff phi kills every relator mod 2.
bool is_class(const Presentation& pres, f2::Vec generator_values);

/// phi^2 == 0 in H^2, decided by lifting phi to a homomorphism onto Z/4.
/// `generator_values` as in H1Class. Throws Error(NotAClass).
bool square_test(const SolGroupSpec& spec, f2::Vec generator_values);
bool square_test(const Presentation& pres, f2::Vec generator_values);

/// Monodromy of the mapping-torus double cover of a twisted union: the
/// action of conjugation by uv on <u^2, y>, in action order.
Mat2Z induced_monodromy(const SolGroupSpec& union_spec);

struct DoubleCoverFactorization {
    Int k = 0, m = 0, n = 0;
    Int m1 = 0, m2 = 0, n1 = 0, n2 = 0;
    SolGroupSpec union_spec;
};

/// For P with diagonal 2k+1 and off-diagonal 2m (top right), 2n (bottom
/// left) in SL(2,Z), writes m = m1 m2, n = n1 n2 with k = m1 n1 and
/// k+1 = m2 n2, and returns the twisted union whose monodromy double cover
/// is the mapping torus of P. Throws Error(BadShape).
DoubleCoverFactorization double_cover_factorization(const Mat2Z& p);

/// Whether a mapping-torus monodromy with this trace and determinant also
/// arises as the double cover of a twisted union.
bool realizable_trace(Int tau, int epsilon);

}  // namespace sol3
