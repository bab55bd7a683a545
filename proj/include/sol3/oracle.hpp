#pragma once

// Classifier-independent checks on H^*(pi; F_2).
//
// A combination sum a_ij phi_i phi_j of cup products of degree-1 classes
// vanishes in H^2(pi) iff the central extension of pi by Z/2 pulled back
// along Phi = (phi_1, ..., phi_k): pi -> V = F_2^k from the cocycle
// c(v, w) = sum a_ij v_i w_j splits, i.e. iff Phi lifts to a homomorphism
// into the extension group V x F_2. With three generators there are eight
// candidate lifts, each checked by evaluating the relators exactly.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sol3/classify.hpp"
#include "sol3/intlat.hpp"
#include "sol3/solgroup.hpp"

namespace sol3 {

/// Bilinear cocycle on F_2^k, coefficients indexed by symmetric_pairs(k):
/// pair (i, j) with i <= j contributes a_ij v_i w_j.
struct QuadraticCocycle {
    int k = 0;
    f2::Vec coeffs = 0;

    int operator()(f2::Vec v, f2::Vec w) const;
};

/// Normalized 2-cocycle on F_2^k given by its full value table
/// (bit v * 2^k + w holds c(v, w)); k <= 3.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(const QuadraticCocycle& q);  // NOLINT(google-explicit-constructor)

    int k() const { return k_; }
    int operator()(f2::Vec v, f2::Vec w) const { return static_cast<int>((table_ >> (v * size() + w)) & 1U); }
    std::size_t size() const { return std::size_t{1} << k_; }

    /// Adds the coboundary of f: V -> F_2 (bit v of f_table = f(v), f(0) = 0).
    Cocycle plus_coboundary(std::uint64_t f_table) const;

private:
    int k_ = 0;
    std::uint64_t table_ = 0;
};

/// Elements (v, s) of V x F_2 with (v,s)(w,t) = (v+w, s+t+c(v,w)).
class ExtensionGroup {
public:
    struct Element {
        f2::Vec v = 0;
        int s = 0;
        bool operator==(const Element&) const = default;
    };

    explicit ExtensionGroup(Cocycle c) : c_(c) {}

    std::size_t order() const { return 2 * c_.size(); }
    Element identity() const { return {}; }
    Element multiply(Element x, Element y) const;
    Element inverse(Element x) const;
    /// Square-and-multiply after reducing the exponent mod 4.
    Element power(Element x, Int exponent) const;
    std::vector<Element> elements() const;

    /// Exhaustive associativity, identity, inverse and exponent-4 checks.
    bool satisfies_group_axioms() const;

private:
    Cocycle c_;
};

/// Whether Phi^*[c] = 0 in H^2 of the presented group. `phi[g]` is the image
/// of generator g in V. Throws Error(NotAClass) if Phi kills a relator badly.
bool relation_vanishes(const Presentation& pres, const std::vector<f2::Vec>& phi, const Cocycle& c);

/// Generator images in V for the classes of an H^1 basis.
std::vector<f2::Vec> generator_images(const Presentation& pres, const H1Basis& basis);

/// Vanishing subspace of the symmetric square of H^1 (coordinates over
/// symmetric_pairs(k)), found by testing every nonzero candidate.
f2::Subspace h2_kernel(const Presentation& pres, const std::vector<f2::Vec>& phi, int k);
f2::Subspace h2_kernel(const SolGroupSpec& spec, const H1Basis& basis);
f2::Subspace h2_kernel(const SolGroupSpec& spec);

/// Symmetric trilinear forms over symmetric_triples(beta) coordinates that
/// respect the kernel, the Wu relation for w, and duality. Throws
/// Error(NotApplicable) for beta < 3.
std::vector<f2::Vec> triple_solutions(int beta, const f2::Subspace& kernel, f2::Vec w);

/// The classifier's triple products as a vector over symmetric_triples.
f2::Vec triple_form(const StructureConstants& sc);

enum class Verdict { Agree, Disagree, NotApplicable };
const char* to_string(Verdict v);

struct VerdictEntry {
    std::string item;
    Verdict verdict = Verdict::Agree;
    std::string detail;
};

struct OracleReport {
    int h1_dim = 0;
    std::vector<std::string> h2_kernel;  // basis, formatted
    std::size_t h2_kernel_rank = 0;
    std::size_t triple_survivors = 0;
    bool triple_unique = false;
    AbelianGroup abelianization;
    std::vector<VerdictEntry> verdicts;

    bool all_agree() const;
};

OracleReport verify(const SolGroupSpec& spec, const ClassifiedRing& classified);

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

Presentation d8_presentation();
Presentation almost_extraspecial_presentation();

std::vector<FixtureResult> run_fixtures();

}  // namespace sol3
