#include "sol3/document.hpp"

#include <sstream>

#include "sol3/buindex.hpp"
#include "sol3/classify.hpp"
#include "sol3/error.hpp"
#include "sol3/oracle.hpp"

namespace sol3 {

using nlohmann::json;

namespace {

std::string sum_of(f2::Vec coords, const std::vector<std::string>& names)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!f2::bit(coords, static_cast<int>(i)))
            continue;
        if (!out.empty())
            out += " + ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

template <typename T>
void get_optional(const json& j, const char* key, std::optional<T>& v)
{
    if (j.at(key).is_null())
        v.reset();
    else
        v = j.at(key).get<T>();
}

}  // namespace

SolGroupSpec AnalysisDocument::spec() const
{
    return {parse_family(input.family), input.a, input.b, input.c, input.d};
}

std::map<int, int> AnalysisDocument::bu_multiset() const
{
    std::map<int, int> counts;
    for (const DocBU& e : bu)
        ++counts[e.index];
    return counts;
}

AnalysisDocument analyze(const SolGroupSpec& spec, bool with_oracle)
{
    const GroupInvariants inv = validate(spec);
    const ClassifiedRing cr = classify(spec);

    AnalysisDocument doc;
    doc.input = {to_string(spec.family), spec.a, spec.b, spec.c, spec.d};

    DocInvariants& di = doc.invariants;
    di.epsilon = inv.epsilon;
    di.tau = inv.tau;
    di.delta1 = inv.delta1;
    di.delta2 = inv.delta2;
    di.k = inv.k;
    di.l = inv.l;
    di.orientable = inv.orientable;
    di.abelianization = inv.abelianization.to_string();
    di.free_rank = inv.abelianization.free_rank;
    di.torsion = inv.abelianization.torsion;
    di.beta = inv.beta;
    di.w1 = cr.w1 == 0 ? "0" : cr.basis.name_of(cr.w1);

    doc.case_label = {to_string(cr.label.id), cr.label.basis_note};

    for (const RingGenerator& g : cr.ring.generators)
        doc.ring.generators.push_back({g.name, g.degree});
    doc.ring.relations = cr.ring.relation_strings();

    DocStructure& ds = doc.structure;
    ds.dims.assign(cr.sc.dims.begin(), cr.sc.dims.end());
    for (const auto& b : cr.sc.bases)
        ds.bases.push_back(b);
    const std::size_t gens = presentation(spec).generators.size();
    for (const H1Class& c : cr.basis.classes) {
        DocBasisClass bc{c.name, {}};
        for (std::size_t g = 0; g < gens; ++g)
            bc.values.push_back(f2::bit(c.values, static_cast<int>(g)) ? 1 : 0);
        ds.h1_classes.push_back(bc);
    }
    for (const auto& row : cr.sc.mul12) {
        ds.h1_h1.emplace_back();
        for (f2::Vec v : row)
            ds.h1_h1.back().push_back(sum_of(v, cr.sc.bases[2]));
    }
    for (const auto& row : cr.sc.mul13) {
        ds.h1_h2.emplace_back();
        for (f2::Vec v : row)
            ds.h1_h2.back().push_back(sum_of(v, cr.sc.bases[3]));
    }

    for (const auto& [phi, cube] : cube_table(cr.sc))
        doc.cubes.push_back({cr.basis.name_of(phi), cube});

    const BUTable table = bu_rules(spec, cr);
    for (const BUEntry& e : table.entries)
        doc.bu.push_back({e.name, e.index, e.rule_id, e.generic_index});
    doc.bu_counting_ok = table.counting_invariants_hold();

    if (with_oracle) {
        const OracleReport r = verify(spec, cr);
        DocOracle o;
        o.h1_dim = r.h1_dim;
        o.h2_kernel = r.h2_kernel;
        o.h2_kernel_rank = static_cast<int>(r.h2_kernel_rank);
        o.triple_survivors = static_cast<int>(r.triple_survivors);
        o.triple_unique = r.triple_unique;
        o.abelianization = r.abelianization.to_string();
        for (const VerdictEntry& v : r.verdicts)
            o.verdicts.push_back({v.item, to_string(v.verdict), v.detail});
        o.all_agree = r.all_agree();
        doc.oracle = o;
    }
    return doc;
}

void to_json(json& j, const AnalysisDocument& doc)
{
    j = json::object();
    j["schema"] = doc.schema;
    j["input"] = {{"family", doc.input.family}, {"a", doc.input.a}, {"b", doc.input.b},
                  {"c", doc.input.c},           {"d", doc.input.d}};

    const DocInvariants& di = doc.invariants;
    json inv = {{"epsilon", di.epsilon},
                {"tau", di.tau},
                {"orientable", di.orientable},
                {"abelianization", di.abelianization},
                {"free_rank", di.free_rank},
                {"torsion", di.torsion},
                {"beta", di.beta},
                {"w1", di.w1}};
    put_optional(inv, "delta1", di.delta1);
    put_optional(inv, "delta2", di.delta2);
    put_optional(inv, "k", di.k);
    put_optional(inv, "l", di.l);
    j["invariants"] = inv;

    j["case"] = {{"label", doc.case_label.label}, {"basis_note", doc.case_label.basis_note}};

    json gens = json::array();
    for (const DocGenerator& g : doc.ring.generators)
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    j["ring"] = {{"generators", gens}, {"relations", doc.ring.relations}};

    json classes = json::array();
    for (const DocBasisClass& c : doc.structure.h1_classes)
        classes.push_back({{"name", c.name}, {"values", c.values}});
    j["structure"] = {{"dims", doc.structure.dims},
                      {"bases", doc.structure.bases},
                      {"h1_classes", classes},
                      {"h1_h1", doc.structure.h1_h1},
                      {"h1_h2", doc.structure.h1_h2}};

    json cubes = json::array();
    for (const DocCube& c : doc.cubes)
        cubes.push_back({{"phi", c.phi}, {"cube", c.cube}});
    j["cubes"] = cubes;

    json entries = json::array();
    for (const DocBU& e : doc.bu)
        entries.push_back({{"phi", e.phi}, {"index", e.index}, {"rule", e.rule}, {"generic_index", e.generic_index}});
    json multiset = json::object();
    for (const auto& [value, count] : doc.bu_multiset())
        multiset[std::to_string(value)] = count;
    j["bu"] = {{"entries", entries}, {"counting_invariants_hold", doc.bu_counting_ok}, {"multiset", multiset}};

    if (doc.oracle) {
        const DocOracle& o = *doc.oracle;
        json verdicts = json::array();
        for (const DocVerdict& v : o.verdicts)
            verdicts.push_back({{"item", v.item}, {"verdict", v.verdict}, {"detail", v.detail}});
        j["oracle"] = {{"h1_dim", o.h1_dim},
                       {"h2_kernel", o.h2_kernel},
                       {"h2_kernel_rank", o.h2_kernel_rank},
                       {"triple_survivors", o.triple_survivors},
                       {"triple_unique", o.triple_unique},
                       {"abelianization", o.abelianization},
                       {"verdicts", verdicts},
                       {"all_agree", o.all_agree}};
    }
}

void from_json(const json& j, AnalysisDocument& doc)
{
    doc = AnalysisDocument{};
    doc.schema = j.at("schema").get<std::string>();
    if (doc.schema != kSchema)
        throw Error(ErrorCode::Parse, "unsupported schema " + doc.schema);

    const json& in = j.at("input");
    doc.input = {in.at("family").get<std::string>(), in.at("a").get<Int>(), in.at("b").get<Int>(),
                 in.at("c").get<Int>(), in.at("d").get<Int>()};

    const json& inv = j.at("invariants");
    DocInvariants& di = doc.invariants;
    di.epsilon = inv.at("epsilon").get<int>();
    di.tau = inv.at("tau").get<Int>();
    get_optional(inv, "delta1", di.delta1);
    get_optional(inv, "delta2", di.delta2);
    get_optional(inv, "k", di.k);
    get_optional(inv, "l", di.l);
    di.orientable = inv.at("orientable").get<bool>();
    di.abelianization = inv.at("abelianization").get<std::string>();
    di.free_rank = inv.at("free_rank").get<int>();
    di.torsion = inv.at("torsion").get<std::vector<Int>>();
    di.beta = inv.at("beta").get<int>();
    di.w1 = inv.at("w1").get<std::string>();

    doc.case_label = {j.at("case").at("label").get<std::string>(), j.at("case").at("basis_note").get<std::string>()};

    for (const json& g : j.at("ring").at("generators"))
        doc.ring.generators.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    doc.ring.relations = j.at("ring").at("relations").get<std::vector<std::string>>();

    const json& st = j.at("structure");
    doc.structure.dims = st.at("dims").get<std::vector<int>>();
    doc.structure.bases = st.at("bases").get<std::vector<std::vector<std::string>>>();
    for (const json& c : st.at("h1_classes"))
        doc.structure.h1_classes.push_back({c.at("name").get<std::string>(), c.at("values").get<std::vector<int>>()});
    doc.structure.h1_h1 = st.at("h1_h1").get<std::vector<std::vector<std::string>>>();
    doc.structure.h1_h2 = st.at("h1_h2").get<std::vector<std::vector<std::string>>>();

    for (const json& c : j.at("cubes"))
        doc.cubes.push_back({c.at("phi").get<std::string>(), c.at("cube").get<int>()});

    for (const json& e : j.at("bu").at("entries"))
        doc.bu.push_back({e.at("phi").get<std::string>(), e.at("index").get<int>(), e.at("rule").get<int>(),
                          e.at("generic_index").get<int>()});
    doc.bu_counting_ok = j.at("bu").at("counting_invariants_hold").get<bool>();

    if (j.contains("oracle")) {
        const json& o = j.at("oracle");
        DocOracle out;
        out.h1_dim = o.at("h1_dim").get<int>();
        out.h2_kernel = o.at("h2_kernel").get<std::vector<std::string>>();
        out.h2_kernel_rank = o.at("h2_kernel_rank").get<int>();
        out.triple_survivors = o.at("triple_survivors").get<int>();
        out.triple_unique = o.at("triple_unique").get<bool>();
        out.abelianization = o.at("abelianization").get<std::string>();
        for (const json& v : o.at("verdicts"))
            out.verdicts.push_back({v.at("item").get<std::string>(), v.at("verdict").get<std::string>(),
                                    v.at("detail").get<std::string>()});
        out.all_agree = o.at("all_agree").get<bool>();
        doc.oracle = out;
    }
}

std::string render_json(const AnalysisDocument& doc)
{
    return json(doc).dump(2) + "\n";
}

std::string render_text(const AnalysisDocument& doc)
{
    std::ostringstream os;
    const DocInvariants& di = doc.invariants;
    os << doc.input.family << " (" << doc.input.a << ", " << doc.input.b << ", " << doc.input.c << ", " << doc.input.d
       << ")\n";
    os << "  epsilon " << di.epsilon << ", tau " << di.tau;
    if (di.delta1)
        os << ", delta1 " << *di.delta1 << ", delta2 " << *di.delta2;
    if (di.k)
        os << ", k " << *di.k << ", l " << *di.l;
    os << "\n  H1(pi) = " << di.abelianization << ", beta = " << di.beta << ", "
       << (di.orientable ? "orientable" : "non-orientable, w1 = " + di.w1) << "\n";

    os << "case " << doc.case_label.label;
    if (!doc.case_label.basis_note.empty())
        os << " (" << doc.case_label.basis_note << ")";
    os << "\n  F2[";
    for (std::size_t i = 0; i < doc.ring.generators.size(); ++i)
        os << (i ? ", " : "") << doc.ring.generators[i].name;
    os << "] / (";
    for (std::size_t i = 0; i < doc.ring.relations.size(); ++i)
        os << (i ? ", " : "") << doc.ring.relations[i];
    os << ")\n";

    const DocStructure& st = doc.structure;
    os << "  dims";
    for (int d : st.dims)
        os << ' ' << d;
    os << '\n';
    for (std::size_t deg = 1; deg < st.bases.size(); ++deg) {
        os << "  H" << deg << ":";
        for (const auto& b : st.bases[deg])
            os << ' ' << b;
        os << '\n';
    }
    for (const DocBasisClass& c : st.h1_classes) {
        os << "  " << c.name << " on generators:";
        for (int v : c.values)
            os << ' ' << v;
        os << '\n';
    }
    const auto& h1 = st.h1_classes;
    for (std::size_t i = 0; i < st.h1_h1.size(); ++i)
        for (std::size_t k = i; k < st.h1_h1[i].size(); ++k)
            os << "  " << h1[i].name << " * " << h1[k].name << " = " << st.h1_h1[i][k] << '\n';
    if (st.bases.size() > 2)
        for (std::size_t i = 0; i < st.h1_h2.size(); ++i)
            for (std::size_t k = 0; k < st.h1_h2[i].size(); ++k)
                os << "  " << h1[i].name << " * " << st.bases[2][k] << " = " << st.h1_h2[i][k] << '\n';

    os << "cubes\n";
    for (const DocCube& c : doc.cubes)
        os << "  (" << c.phi << ")^3 = " << c.cube << '\n';
    os << "Borsuk-Ulam index\n";
    for (const DocBU& e : doc.bu)
        os << "  " << e.phi << ": " << e.index << "  (rule " << e.rule << ")\n";
    if (!doc.bu_counting_ok)
        os << "  counting invariants FAIL\n";

    if (doc.oracle) {
        const DocOracle& o = *doc.oracle;
        os << "oracle: " << (o.all_agree ? "all agree" : "DISAGREEMENT") << '\n';
        for (const DocVerdict& v : o.verdicts)
            os << "  " << v.item << ": " << v.verdict << "  " << v.detail << '\n';
    }
    return os.str();
}

std::string csv_header()
{
    return "# sol3/1\na,b,c,d,family,epsilon,tau,delta1,delta2,case,beta,bu,oracle";
}

std::string csv_row(const AnalysisDocument& doc)
{
    std::ostringstream os;
    const DocInvariants& di = doc.invariants;
    os << doc.input.a << ',' << doc.input.b << ',' << doc.input.c << ',' << doc.input.d << ',' << doc.input.family
       << ',' << di.epsilon << ',' << di.tau << ',';
    if (di.delta1)
        os << *di.delta1;
    os << ',';
    if (di.delta2)
        os << *di.delta2;
    os << ',' << doc.case_label.label << ',' << di.beta << ',';
    bool first = true;
    for (const auto& [value, count] : doc.bu_multiset()) {
        os << (first ? "" : ";") << value << 'x' << count;
        first = false;
    }
    os << ',';
    if (doc.oracle)
        os << (doc.oracle->all_agree ? "agree" : "disagree");
    else
        os << '-';
    return os.str();
}

}  // namespace sol3
