#pragma once

#include <string>
#include <vector>

#include "sol3/classify.hpp"

namespace sol3 {

struct BUEntry {
    f2::Vec phi = 0;  // coordinates over the classified basis
    std::string name;
    int index = 0;          // from the rule table
    int rule_id = 0;        // 1..11
    int generic_index = 0;  // from the cohomological definition
};

struct BUTable {
    Family family = Family::MappingTorus;
    std::vector<BUEntry> entries;  // every nonzero class, ascending phi

    /// Per-rule split checks: rules 4 and 6 give two 2s and four 3s off
    /// rho, rule 7 four 2s and two 3s; exactly rho has index 1 on a mapping
    /// torus and nothing does on a union.
    bool counting_invariants_hold() const;
};

/// phi lifts to an integral class (mod-2 reduction of some pi -> Z).
bool lifts_integrally(const SolGroupSpec& spec, f2::Vec generator_values);

/// 1 if phi lifts to Z, else 3 if phi^3 != 0, else 2. Throws Error(ZeroClass).
int bu_generic(const SolGroupSpec& spec, const ClassifiedRing& classified, f2::Vec phi);

/// Index table from the per-family rule list, cross-checked against
/// bu_generic. Throws Error(CrossCheckMismatch) on any disagreement.
BUTable bu_rules(const SolGroupSpec& spec, const ClassifiedRing& classified);

}  // namespace sol3
