#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sol3/buindex.hpp"
#include "sol3/classify.hpp"
#include "sol3/document.hpp"
#include "sol3/error.hpp"
#include "sol3/oracle.hpp"

namespace py = pybind11;
using namespace sol3;

namespace {

SolGroupSpec make_spec(const std::string& family, Int a, Int b, Int c, Int d)
{
    return {parse_family(family), a, b, c, d};
}

IntMatrix to_matrix(const std::vector<std::vector<Int>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorCode::BadShape, "ragged matrix");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

py::tuple as_tuple(const Mat2Z& m)
{
    return py::make_tuple(m.a, m.b, m.c, m.d);
}

}  // namespace

PYBIND11_MODULE(_sol3, m)
{
    m.doc() = "Mod-2 cohomology rings and Borsuk-Ulam indices of Sol^3-manifold groups";

    py::register_exception<Error>(m, "Sol3Error", PyExc_ValueError);

    m.def(
        "analyze_json",
        [](const std::string& family, Int a, Int b, Int c, Int d, bool verify) {
            return render_json(analyze(make_spec(family, a, b, c, d), verify));
        },
        py::arg("family"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("verify") = false);

    m.def("is_valid", [](const std::string& family, Int a, Int b, Int c, Int d) {
        return is_valid(make_spec(family, a, b, c, d));
    });

    m.def("case_label", [](const std::string& family, Int a, Int b, Int c, Int d) {
        return std::string(to_string(classify(make_spec(family, a, b, c, d)).label.id));
    });

    m.def("abelianization", [](const std::string& family, Int a, Int b, Int c, Int d) {
        return abelianization(make_spec(family, a, b, c, d)).to_string();
    });

    m.def("bu_indices", [](const std::string& family, Int a, Int b, Int c, Int d) {
        const SolGroupSpec spec = make_spec(family, a, b, c, d);
        std::vector<std::pair<std::string, int>> out;
        for (const BUEntry& e : bu_rules(spec, classify(spec)).entries)
            out.emplace_back(e.name, e.index);
        return out;
    });

    m.def("induced_monodromy",
          [](Int a, Int b, Int c, Int d) { return as_tuple(induced_monodromy(SolGroupSpec::twisted_union(a, b, c, d))); });

    m.def("double_cover_factorization", [](Int a, Int b, Int c, Int d) {
        const DoubleCoverFactorization f = double_cover_factorization(Mat2Z{a, b, c, d});
        py::dict out;
        out["k"] = f.k;
        out["m"] = f.m;
        out["n"] = f.n;
        out["m1"] = f.m1;
        out["m2"] = f.m2;
        out["n1"] = f.n1;
        out["n2"] = f.n2;
        out["union"] = py::make_tuple(f.union_spec.a, f.union_spec.b, f.union_spec.c, f.union_spec.d);
        return out;
    });

    m.def("smith_diagonal",
          [](const std::vector<std::vector<Int>>& rows) { return smith_normal_form(to_matrix(rows)).diag; });

    m.def("fixtures", [] {
        std::vector<py::tuple> out;
        for (const FixtureResult& r : run_fixtures())
            out.push_back(py::make_tuple(r.name, r.passed, r.detail));
        return out;
    });
}
