#include "sol3/classify.hpp"

#include <stdexcept>

#include "sol3/error.hpp"

namespace sol3 {

namespace {

struct CaseName {
    CaseId id;
    const char* name;
};

constexpr CaseName kCaseNames[] = {
    {CaseId::C1, "C1"},       {CaseId::C2, "C2"},           {CaseId::C3, "C3"},
    {CaseId::C4, "C4"},       {CaseId::C5, "C5"},           {CaseId::C6a, "C6a"},
    {CaseId::C6b, "C6b"},     {CaseId::C6c, "C6c"},         {CaseId::C7, "C7"},
    {CaseId::C8a, "C8a"},     {CaseId::C8b, "C8b"},         {CaseId::C8c, "C8c"},
    {CaseId::C9, "C9"},       {CaseId::UbOdd, "Ub-odd"},    {CaseId::Ub0Mod4, "Ub-0mod4"},
    {CaseId::Ub2Mod4, "Ub-2mod4"},
};

const std::vector<RingGenerator> kRhoSigmaPsi = {{"rho", 1}, {"sigma", 1}, {"psi", 1}};
const std::vector<RingGenerator> kUVY = {{"U", 1}, {"V", 1}, {"Y", 1}};

// Residues and 2-adic data shared by the predicates.
struct Arithmetic {
    Int a, b, c, d;
    Int eps, tau, delta1, delta2;
    int l = 0;  // v_2(delta2) when delta2 is even, else 0

    explicit Arithmetic(const SolGroupSpec& s)
        : a(s.a), b(s.b), c(s.c), d(s.d)
    {
        const Mat2Z m = s.matrix();
        eps = m.det();
        tau = m.trace();
        delta1 = 1 - tau + eps;
        delta2 = gcd(gcd(a - 1, b), gcd(c, d - 1));
        if (delta2 % 2 == 0)
            l = two_adic_valuation(delta2);
    }

    static Int mod4(Int x) { return floor_mod(x, 4); }
    static Int mod8(Int x) { return floor_mod(x, 8); }
};

}  // namespace

const char* to_string(CaseId id)
{
    for (const auto& entry : kCaseNames)
        if (entry.id == id)
            return entry.name;
    return "?";
}

CaseId parse_case(const std::string& text)
{
    for (const auto& entry : kCaseNames)
        if (text == entry.name)
            return entry.id;
    throw Error(ErrorCode::Parse, "unknown case label '" + text + "'");
}

const std::vector<CaseId>& all_cases()
{
    static const std::vector<CaseId> cases = [] {
        std::vector<CaseId> out;
        for (const auto& entry : kCaseNames)
            out.push_back(entry.id);
        return out;
    }();
    return cases;
}

GradedRingF2 reference_ring(CaseId id)
{
    switch (id) {
    case CaseId::C1:
        return GradedRingF2::parse({{"rho", 1}, {"Xi", 2}}, {"rho^2", "Xi^2"});
    case CaseId::C2:
        return GradedRingF2::parse({{"rho", 1}, {"sigma", 1}, {"Xi", 2}},
                                   {"rho^2", "rho*sigma", "sigma*Xi", "rho*Xi + sigma^3", "Xi^2"});
    case CaseId::C3:
        return GradedRingF2::parse({{"rho", 1}, {"sigma", 1}, {"Xi", 2}, {"Omega", 2}},
                                   {"rho^2", "rho*sigma", "sigma^2", "rho*Omega", "sigma*Xi",
                                    "rho*Xi + sigma*Omega", "Xi^2", "Omega^2", "Xi*Omega"});
    case CaseId::C4:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "sigma^2", "psi^2"});
    case CaseId::C5:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "rho*psi + sigma^2", "psi^2"});
    case CaseId::C6a:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "rho*psi + sigma^2", "rho*sigma + psi^2"});
    case CaseId::C6b:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "rho*sigma + sigma^2", "rho*psi + sigma^2 + psi^2"});
    case CaseId::C6c:
        // sigma <-> psi mirror of C6b
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "rho*psi + psi^2", "rho*sigma + psi^2 + sigma^2"});
    case CaseId::C7:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "rho*sigma + sigma^2", "rho*psi + psi^2"});
    case CaseId::C8a:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "sigma^2", "rho*psi + psi^2"});
    case CaseId::C8b:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "sigma^2 + psi^2", "rho*psi + psi^2", "sigma^2*psi"});
    case CaseId::C8c:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "sigma^2", "psi^2 + rho*sigma + rho*psi"});
    case CaseId::C9:
        return GradedRingF2::parse(kRhoSigmaPsi, {"rho^2", "sigma^2 + rho*psi", "psi^2 + rho*sigma + rho*psi"});
    case CaseId::UbOdd:
        // U*Omega and V*Xi are forced by duality (top degree must be 1-dimensional).
        return GradedRingF2::parse({{"U", 1}, {"V", 1}, {"Xi", 2}, {"Omega", 2}},
                                   {"U^2", "U*V", "V^2", "U*Omega", "V*Xi", "U*Xi + V*Omega", "Xi^2",
                                    "Omega^2", "Xi*Omega"});
    case CaseId::Ub0Mod4:
        return GradedRingF2::parse(kUVY, {"U*V", "U^2 + V^2", "U*Y + V*Y + Y^2"});
    case CaseId::Ub2Mod4:
        return GradedRingF2::parse(kUVY, {"U*V", "U^2 + V^2", "U*Y + V*Y + U^2 + Y^2"});
    }
    throw std::logic_error("unhandled case id");
}

std::vector<CaseId> matching_cases(const SolGroupSpec& spec)
{
    validate(spec);
    std::vector<CaseId> out;
    auto add_if = [&](bool pred, CaseId id) {
        if (pred)
            out.push_back(id);
    };

    if (spec.family == Family::TwistedUnion) {
        const Int b4 = Arithmetic::mod4(spec.b);
        add_if(b4 % 2 == 1, CaseId::UbOdd);
        add_if(b4 == 0, CaseId::Ub0Mod4);
        add_if(b4 == 2, CaseId::Ub2Mod4);
        return out;
    }

    const Arithmetic x(spec);
    using A = Arithmetic;
    const bool tau_odd = A::mod4(x.tau) % 2 == 1;
    const bool tau_eps_minus = A::mod4(x.tau) == A::mod4(x.eps - 1);
    const bool tau_eps_plus = A::mod4(x.tau) == A::mod4(x.eps + 1);
    const bool d2_even = x.delta2 % 2 == 0;
    const bool l_one = d2_even && x.l == 1;

    add_if(tau_odd, CaseId::C1);
    add_if(!tau_odd && tau_eps_minus, CaseId::C2);
    add_if(tau_eps_plus && !d2_even, CaseId::C3);
    add_if(tau_eps_plus && d2_even && x.l >= 2, CaseId::C4);

    const bool orientable_l1 = x.eps == 1 && tau_eps_plus && l_one;
    add_if(orientable_l1 && A::mod8(x.delta1) == 0, CaseId::C5);
    const bool d1_four = orientable_l1 && A::mod8(x.delta1) == 4;
    add_if(d1_four && A::mod4(x.a) == 1, CaseId::C6a);
    add_if(d1_four && A::mod4(x.a) == 3 && A::mod4(x.b) == 2 && A::mod4(x.c) == 0, CaseId::C6b);
    add_if(d1_four && A::mod4(x.a) == 3 && A::mod4(x.b) == 0 && A::mod4(x.c) == 2, CaseId::C6c);
    add_if(d1_four && A::mod4(x.a) == 3 && A::mod4(x.b) == 0 && A::mod4(x.c) == 0, CaseId::C7);

    // Non-orientable: read b, c after the x <-> y swap that makes a == 1 mod 4.
    const bool nonorientable_l1 = x.eps == -1 && tau_eps_plus && l_one;
    const bool swapped = A::mod4(x.a) == 3;
    const Int b4 = A::mod4(swapped ? x.c : x.b);
    const Int c4 = A::mod4(swapped ? x.b : x.c);
    add_if(nonorientable_l1 && b4 == 0 && c4 == 0, CaseId::C8a);
    add_if(nonorientable_l1 && b4 == 0 && c4 == 2, CaseId::C8b);
    add_if(nonorientable_l1 && b4 == 2 && c4 == 0, CaseId::C8c);
    add_if(nonorientable_l1 && b4 == 2 && c4 == 2, CaseId::C9);
    return out;
}

ClassifiedRing classify(const SolGroupSpec& spec)
{
    const GroupInvariants inv = validate(spec);
    ClassifiedRing out;
    out.label.family = spec.family;
    out.basis = h1_basis(spec);
    out.w1 = inv.w1;

    bool swap_sigma_psi = false;
    if (spec.family == Family::TwistedUnion) {
        const Int b4 = floor_mod(spec.b, 4);
        out.label.id = b4 % 2 == 1 ? CaseId::UbOdd : (b4 == 0 ? CaseId::Ub0Mod4 : CaseId::Ub2Mod4);
    } else {
        const Arithmetic x(spec);
        using A = Arithmetic;
        if (A::mod4(x.tau) % 2 == 1) {
            out.label.id = CaseId::C1;
        } else if (A::mod4(x.tau) == A::mod4(x.eps - 1)) {
            out.label.id = CaseId::C2;
        } else if (x.delta2 % 2 != 0) {
            out.label.id = CaseId::C3;
        } else if (x.l >= 2) {
            out.label.id = CaseId::C4;
        } else if (x.eps == 1) {
            if (A::mod8(x.delta1) == 0) {
                out.label.id = CaseId::C5;
                const f2::Vec sigma = 0b010, psi = 0b100;
                const bool sigma_zero = square_test(spec, sigma);
                const bool psi_zero = square_test(spec, psi);
                const bool sum_zero = square_test(spec, sigma ^ psi);
                if (sigma_zero + psi_zero + sum_zero != 1)
                    throw std::logic_error("expected exactly one square-zero class among sigma, psi, sigma+psi for " +
                                           spec.to_string());
                if (sigma_zero) {
                    out.basis.classes[1].values = psi;
                    out.basis.classes[2].values = sigma;
                    out.label.basis_note = "sigma and psi exchanged so that psi^2 = 0";
                } else if (sum_zero) {
                    out.basis.classes[2].values = sigma ^ psi;
                    out.label.basis_note = "psi replaced by sigma+psi so that psi^2 = 0";
                }
            } else if (A::mod4(x.a) == 1) {
                out.label.id = CaseId::C6a;
            } else {
                const Int b4 = A::mod4(x.b), c4 = A::mod4(x.c);
                if (b4 == 2 && c4 == 0)
                    out.label.id = CaseId::C6b;
                else if (b4 == 0 && c4 == 2)
                    out.label.id = CaseId::C6c;
                else if (b4 == 0 && c4 == 0)
                    out.label.id = CaseId::C7;
                else
                    throw std::logic_error("orientable l = 1 input escapes cases 6-7: " + spec.to_string());
            }
        } else {
            Int b = x.b, c = x.c;
            if (A::mod4(x.a) == 3) {
                // Classify (d, c, b, a) and move the answer back to the given basis.
                swap_sigma_psi = true;
                std::swap(b, c);
                out.label.basis_note = "classified with x and y exchanged, i.e. (a,b,c,d) -> (d,c,b,a); "
                                       "sigma and psi relabelled back";
            }
            const Int b4 = A::mod4(b), c4 = A::mod4(c);
            if (b4 == 0 && c4 == 0)
                out.label.id = CaseId::C8a;
            else if (b4 == 0 && c4 == 2)
                out.label.id = CaseId::C8b;
            else if (b4 == 2 && c4 == 0)
                out.label.id = CaseId::C8c;
            else
                out.label.id = CaseId::C9;
        }
    }

    const auto matches = matching_cases(spec);
    if (matches.size() != 1 || matches.front() != out.label.id)
        throw std::logic_error("case predicates do not single out " + std::string(to_string(out.label.id)) +
                               " for " + spec.to_string());

    out.ring = reference_ring(out.label.id);
    if (swap_sigma_psi)
        out.ring = out.ring.relabel({0, 2, 1});
    out.sc = normalize(out.ring);

    const int beta = inv.beta;
    if (out.sc.dims != std::array<int, 4>{1, beta, beta, 1})
        throw std::logic_error("ring dimensions disagree with beta for " + spec.to_string());
    if (!pd_check(out.sc) || !wu_check(out.sc, out.w1))
        throw std::logic_error("classified ring fails duality or the Wu relation for " + spec.to_string());
    return out;
}

}  // namespace sol3
