#pragma once

// Flat, serializable record of one analysis. Everything here is plain data
// so that JSON round-trips are exact.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sol3/solgroup.hpp"

namespace sol3 {

inline constexpr const char* kSchema = "sol3/1";

struct DocInput {
    std::string family;
    Int a = 0, b = 0, c = 0, d = 0;
    bool operator==(const DocInput&) const = default;
};

struct DocInvariants {
    int epsilon = 1;
    Int tau = 0;
    std::optional<Int> delta1, delta2;
    std::optional<int> k, l;
    bool orientable = true;
    std::string abelianization;
    int free_rank = 0;
    std::vector<Int> torsion;
    int beta = 0;
    std::string w1;  // class name, "0" when orientable
    bool operator==(const DocInvariants&) const = default;
};

struct DocCase {
    std::string label;
    std::string basis_note;
    bool operator==(const DocCase&) const = default;
};

struct DocGenerator {
    std::string name;
    int degree = 1;
    bool operator==(const DocGenerator&) const = default;
};

struct DocRing {
    std::vector<DocGenerator> generators;
    std::vector<std::string> relations;
    bool operator==(const DocRing&) const = default;
};

struct DocBasisClass {
    std::string name;
    std::vector<int> values;  // value on each presentation generator
    bool operator==(const DocBasisClass&) const = default;
};

struct DocStructure {
    std::vector<int> dims;
    std::vector<std::vector<std::string>> bases;
    std::vector<DocBasisClass> h1_classes;
    // Products of basis elements, written as sums of basis names ("0" for zero).
    std::vector<std::vector<std::string>> h1_h1;
    std::vector<std::vector<std::string>> h1_h2;
    bool operator==(const DocStructure&) const = default;
};

struct DocCube {
    std::string phi;
    int cube = 0;
    bool operator==(const DocCube&) const = default;
};

struct DocBU {
    std::string phi;
    int index = 0;
    int rule = 0;
    int generic_index = 0;
    bool operator==(const DocBU&) const = default;
};

struct DocVerdict {
    std::string item;
    std::string verdict;
    std::string detail;
    bool operator==(const DocVerdict&) const = default;
};

struct DocOracle {
    int h1_dim = 0;
    std::vector<std::string> h2_kernel;
    int h2_kernel_rank = 0;
    int triple_survivors = 0;
    bool triple_unique = false;
    std::string abelianization;
    std::vector<DocVerdict> verdicts;
    bool all_agree = true;
    bool operator==(const DocOracle&) const = default;
};

struct AnalysisDocument {
    std::string schema = kSchema;
    DocInput input;
    DocInvariants invariants;
    DocCase case_label;
    DocRing ring;
    DocStructure structure;
    std::vector<DocCube> cubes;
    std::vector<DocBU> bu;
    bool bu_counting_ok = true;
    std::optional<DocOracle> oracle;

    bool operator==(const AnalysisDocument&) const = default;

    SolGroupSpec spec() const;
    /// Count of each BU value, e.g. {2: 3, 3: 4}.
    std::map<int, int> bu_multiset() const;
};

/// Runs validation, classification, the BU table and (optionally) the oracle.
/// Propagates Error for invalid input.
AnalysisDocument analyze(const SolGroupSpec& spec, bool with_oracle);

void to_json(nlohmann::json& j, const AnalysisDocument& doc);
void from_json(const nlohmann::json& j, AnalysisDocument& doc);

std::string render_json(const AnalysisDocument& doc);
std::string render_text(const AnalysisDocument& doc);

std::string csv_header();
std::string csv_row(const AnalysisDocument& doc);

}  // namespace sol3
