#pragma once

#include <string>
#include <vector>

#include "sol3/ringalg.hpp"
#include "sol3/solgroup.hpp"

namespace sol3 {

enum class CaseId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6a,
    C6b,
    C6c,
    C7,
    C8a,
    C8b,
    C8c,
    C9,
    UbOdd,
    Ub0Mod4,
    Ub2Mod4,
};

const char* to_string(CaseId id);
CaseId parse_case(const std::string& text);
const std::vector<CaseId>& all_cases();

struct CaseLabel {
    Family family = Family::MappingTorus;
    CaseId id = CaseId::C1;
    // Empty unless the output basis differs from h1_basis(spec).
    std::string basis_note;
};

struct ClassifiedRing {
    CaseLabel label;
    GradedRingF2 ring;
    StructureConstants sc;
    f2::Vec w1 = 0;  // over `basis`
    H1Basis basis;   // the H^1 basis the ring is written in
};

/// Case presentation written over its own canonical basis (rho, sigma, psi)
/// or (U, V, Y); degree-2 generators Xi, Omega follow the degree-1 ones.
GradedRingF2 reference_ring(CaseId id);

/// Every case predicate that holds for the spec, each evaluated on its own.
/// Exactly one holds for any valid input.
std::vector<CaseId> matching_cases(const SolGroupSpec& spec);

ClassifiedRing classify(const SolGroupSpec& spec);

}  // namespace sol3
