// sol3: mod-2 cohomology rings and Borsuk-Ulam indices of Sol^3-manifold groups.

#include <cstdlib>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sol3/document.hpp"
#include "sol3/error.hpp"
#include "sol3/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

struct AnalyzeArgs {
    std::string family;
    std::vector<sol3::Int> entries;
    bool verify = false;
    std::string format = "text";
};

void add_analyze_options(CLI::App* cmd, AnalyzeArgs& args, bool verify_flag)
{
    cmd->add_option("family", args.family, "mapping-torus | union")->required();
    cmd->add_option("entries", args.entries, "a b c d, with t x t^-1 = x^a y^b (action order)")
        ->required()
        ->expected(4);
    if (verify_flag)
        cmd->add_flag("--verify", args.verify, "run the independent oracles");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();
}

int run_analyze(const AnalyzeArgs& args)
{
    const sol3::SolGroupSpec spec{sol3::parse_family(args.family), args.entries[0], args.entries[1], args.entries[2],
                                  args.entries[3]};
    const sol3::AnalysisDocument doc = sol3::analyze(spec, args.verify);
    if (args.format == "json")
        std::cout << sol3::render_json(doc);
    else if (args.format == "csv")
        std::cout << sol3::csv_header() << '\n' << sol3::csv_row(doc) << '\n';
    else
        std::cout << sol3::render_text(doc);
    if (doc.oracle && !doc.oracle->all_agree) {
        std::cerr << "verification disagreement on " << spec.to_string() << '\n';
        return kExitDisagree;
    }
    return kExitOk;
}

struct EnumerateArgs {
    sol3::Int bound = 1;
    std::string family = "mapping-torus";
    bool verify = false;
    std::string format = "csv";
};

int run_enumerate(const EnumerateArgs& args)
{
    if (args.bound < 1)
        throw sol3::Error(sol3::ErrorCode::Parse, "--bound must be at least 1");
    const sol3::Family family = sol3::parse_family(args.family);
    const sol3::Int n = args.bound;
    std::map<std::string, int> frequency;
    int rows = 0;
    int disagreements = 0;

    if (args.format == "csv")
        std::cout << sol3::csv_header() << '\n';
    for (sol3::Int a = -n; a <= n; ++a)
        for (sol3::Int b = -n; b <= n; ++b)
            for (sol3::Int c = -n; c <= n; ++c)
                for (sol3::Int d = -n; d <= n; ++d) {
                    const sol3::SolGroupSpec spec{family, a, b, c, d};
                    if (!sol3::is_valid(spec))
                        continue;
                    const sol3::AnalysisDocument doc = sol3::analyze(spec, args.verify);
                    ++rows;
                    ++frequency[doc.case_label.label];
                    if (doc.oracle && !doc.oracle->all_agree)
                        ++disagreements;
                    if (args.format == "csv")
                        std::cout << sol3::csv_row(doc) << '\n';
                    else if (args.format == "json")
                        std::cout << nlohmann::json(doc).dump() << '\n';
                    else
                        std::cout << spec.to_string() << "  " << doc.case_label.label << '\n';
                }

    const char* prefix = args.format == "json" ? "// " : "# ";
    std::cout << prefix << "rows " << rows << '\n';
    for (const auto& [label, count] : frequency)
        std::cout << prefix << label << ' ' << count << '\n';
    if (args.verify)
        std::cout << prefix << "disagreements " << disagreements << '\n';
    return disagreements == 0 ? kExitOk : kExitDisagree;
}

int run_fixtures()
{
    bool all = true;
    for (const sol3::FixtureResult& r : sol3::run_fixtures()) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
        all = all && r.passed;
    }
    return all ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mod-2 cohomology and Borsuk-Ulam indices of Sol^3-manifold groups"};
    app.require_subcommand(1);

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "classify one input");
    add_analyze_options(analyze, analyze_args, true);

    AnalyzeArgs verify_args;
    verify_args.verify = true;
    auto* verify = app.add_subcommand("verify", "analyze with --verify");
    add_analyze_options(verify, verify_args, false);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "every valid input with entries bounded by N");
    enumerate->add_option("--bound", enum_args.bound, "N")->required();
    enumerate->add_option("--family", enum_args.family, "mapping-torus | union")->capture_default_str();
    enumerate->add_flag("--verify", enum_args.verify, "run the oracles on each row");
    enumerate->add_option("--format", enum_args.format, "output format")
        ->check(CLI::IsMember({"json", "text", "csv"}))
        ->capture_default_str();

    auto* fixtures = app.add_subcommand("fixtures", "run the finite-group fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_args);
        if (*verify)
            return run_analyze(verify_args);
        if (*enumerate)
            return run_enumerate(enum_args);
        if (*fixtures)
            return run_fixtures();
    } catch (const sol3::Error& e) {
        std::cerr << e.what() << '\n';
        return e.code() == sol3::ErrorCode::CrossCheckMismatch ? kExitDisagree : kExitInvalid;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return kExitDisagree;
    }
    return kExitOk;
}
