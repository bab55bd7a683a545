#include "sol3/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sol3/error.hpp"

namespace sol3 {

int QuadraticCocycle::operator()(f2::Vec v, f2::Vec w) const
{
    int value = 0;
    int p = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j, ++p)
            if (f2::bit(coeffs, p) && f2::bit(v, i) && f2::bit(w, j))
                value ^= 1;
    return value;
}

Cocycle::Cocycle(const QuadraticCocycle& q) : k_(q.k)
{
    if (q.k < 0 || q.k > 3)
        throw Error(ErrorCode::BadDims, "cocycles are supported on F_2^k for k <= 3");
    for (f2::Vec v = 0; v < size(); ++v)
        for (f2::Vec w = 0; w < size(); ++w)
            if (q(v, w))
                table_ |= std::uint64_t{1} << (v * size() + w);
}

Cocycle Cocycle::plus_coboundary(std::uint64_t f_table) const
{
    f_table &= ~std::uint64_t{1};  // f(0) = 0 keeps the cocycle normalized
    auto f = [&](f2::Vec v) { return static_cast<int>((f_table >> v) & 1U); };
    Cocycle out = *this;
    for (f2::Vec v = 0; v < size(); ++v)
        for (f2::Vec w = 0; w < size(); ++w)
            if (f(v) ^ f(w) ^ f(v ^ w))
                out.table_ ^= std::uint64_t{1} << (v * size() + w);
    return out;
}

ExtensionGroup::Element ExtensionGroup::multiply(Element x, Element y) const
{
    return {x.v ^ y.v, x.s ^ y.s ^ c_(x.v, y.v)};
}

ExtensionGroup::Element ExtensionGroup::inverse(Element x) const
{
    return {x.v, x.s ^ c_(x.v, x.v)};
}

ExtensionGroup::Element ExtensionGroup::power(Element x, Int exponent) const
{
    Int e = floor_mod(exponent, 4);
    Element result = identity();
    Element base = x;
    while (e > 0) {
        if (e & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<ExtensionGroup::Element> ExtensionGroup::elements() const
{
    std::vector<Element> out;
    for (f2::Vec v = 0; v < c_.size(); ++v)
        for (int s = 0; s < 2; ++s)
            out.push_back({v, s});
    return out;
}

bool ExtensionGroup::satisfies_group_axioms() const
{
    const auto all = elements();
    const Element e = identity();
    for (const Element& x : all) {
        if (!(multiply(e, x) == x) || !(multiply(x, e) == x))
            return false;
        const Element inv = inverse(x);
        if (!(multiply(x, inv) == e) || !(multiply(inv, x) == e))
            return false;
        const Element x2 = multiply(x, x);
        if (!(multiply(x2, x2) == e))
            return false;
        for (const Element& y : all)
            for (const Element& z : all)
                if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                    return false;
    }
    return true;
}

bool relation_vanishes(const Presentation& pres, const std::vector<f2::Vec>& phi, const Cocycle& c)
{
    if (phi.size() != pres.generators.size())
        throw Error(ErrorCode::BadShape, "one image per generator expected");
    for (const Word& w : pres.relators) {
        f2::Vec image = 0;
        for (const Syllable& s : w)
            if (floor_mod(s.exponent, 2) == 1)
                image ^= phi[s.generator];
        if (image != 0)
            throw Error(ErrorCode::NotAClass, "generator images do not define a homomorphism to F_2^k");
    }

    const ExtensionGroup group(c);
    const std::size_t n = pres.generators.size();
    std::vector<ExtensionGroup::Element> lift(n);
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << n); ++choice) {
        for (std::size_t g = 0; g < n; ++g)
            lift[g] = {phi[g], static_cast<int>((choice >> g) & 1U)};
        bool splits = true;
        for (const Word& w : pres.relators) {
            ExtensionGroup::Element acc = group.identity();
            for (const Syllable& s : w)
                acc = group.multiply(acc, group.power(lift[s.generator], s.exponent));
            if (!(acc == group.identity())) {
                splits = false;
                break;
            }
        }
        if (splits)
            return true;
    }
    return false;
}

std::vector<f2::Vec> generator_images(const Presentation& pres, const H1Basis& basis)
{
    std::vector<f2::Vec> phi(pres.generators.size(), 0);
    for (std::size_t g = 0; g < phi.size(); ++g)
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (f2::bit(basis.classes[i].values, static_cast<int>(g)))
                phi[g] |= f2::Vec{1} << i;
    return phi;
}

f2::Subspace h2_kernel(const Presentation& pres, const std::vector<f2::Vec>& phi, int k)
{
    const std::size_t pairs = symmetric_pairs(k).size();
    std::set<f2::Vec> vanishing{0};
    for (f2::Vec coeffs = 1; coeffs < (f2::Vec{1} << pairs); ++coeffs)
        if (relation_vanishes(pres, phi, Cocycle(QuadraticCocycle{k, coeffs})))
            vanishing.insert(coeffs);

    f2::Subspace kernel;
    for (f2::Vec v : vanishing)
        kernel.insert(v);
    if (vanishing.size() != (std::size_t{1} << kernel.dim()))
        throw std::logic_error("vanishing relations do not form a subspace");
    for (f2::Vec x : vanishing)
        for (f2::Vec y : vanishing)
            if (!vanishing.count(x ^ y))
                throw std::logic_error("vanishing relations are not closed under addition");
    return kernel;
}

f2::Subspace h2_kernel(const SolGroupSpec& spec, const H1Basis& basis)
{
    const Presentation pres = presentation(spec);
    return h2_kernel(pres, generator_images(pres, basis), static_cast<int>(basis.size()));
}

f2::Subspace h2_kernel(const SolGroupSpec& spec) { return h2_kernel(spec, h1_basis(spec)); }

namespace {

struct TripleIndex {
    int beta;
    std::vector<int> slot;  // beta^3 lookup of sorted (i, j, k)

    explicit TripleIndex(int b) : beta(b), slot(b * b * b, -1)
    {
        const auto triples = symmetric_triples(b);
        for (std::size_t t = 0; t < triples.size(); ++t)
            slot[(triples[t][0] * b + triples[t][1]) * b + triples[t][2]] = static_cast<int>(t);
    }

    int operator()(int i, int j, int k) const
    {
        std::array<int, 3> s{i, j, k};
        std::sort(s.begin(), s.end());
        return slot[(s[0] * beta + s[1]) * beta + s[2]];
    }
};

}  // namespace

std::vector<f2::Vec> triple_solutions(int beta, const f2::Subspace& kernel, f2::Vec w)
{
    if (beta < 3)
        throw Error(ErrorCode::NotApplicable, "triple products are pinned by H^1 only when beta = 3");
    const auto pairs = symmetric_pairs(beta);
    const auto triples = symmetric_triples(beta);
    if (triples.size() > 20)
        throw Error(ErrorCode::NotApplicable, "too many trilinear forms to enumerate");
    const TripleIndex index(beta);

    // Complement of the kernel: unit vectors off the pivot columns.
    std::vector<int> complement;
    const f2::Vec pivots = kernel.pivot_mask();
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (!f2::bit(pivots, static_cast<int>(p)))
            complement.push_back(static_cast<int>(p));

    std::vector<f2::Vec> survivors;
    for (f2::Vec mu = 0; mu < (f2::Vec{1} << triples.size()); ++mu) {
        auto value = [&](int i, int j, int k) { return static_cast<int>(f2::bit(mu, index(i, j, k))); };

        bool ok = true;
        for (f2::Vec rel : kernel.basis()) {
            for (int k = 0; k < beta && ok; ++k) {
                int sum = 0;
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    if (f2::bit(rel, static_cast<int>(p)))
                        sum ^= value(pairs[p].first, pairs[p].second, k);
                ok = sum == 0;
            }
            if (!ok)
                break;
        }
        for (int j = 0; j < beta && ok; ++j)
            for (int k = 0; k < beta && ok; ++k) {
                int lhs = 0;
                for (int i = 0; i < beta; ++i)
                    if (f2::bit(w, i))
                        lhs ^= value(i, j, k);
                ok = lhs == (value(j, j, k) ^ value(j, k, k));
            }
        if (!ok || complement.size() != static_cast<std::size_t>(beta))
            continue;

        std::vector<f2::Vec> rows;
        for (int k = 0; k < beta; ++k) {
            f2::Vec row = 0;
            for (std::size_t q = 0; q < complement.size(); ++q)
                if (value(pairs[complement[q]].first, pairs[complement[q]].second, k))
                    row |= f2::Vec{1} << q;
            rows.push_back(row);
        }
        if (f2::rank(rows) == static_cast<std::size_t>(beta))
            survivors.push_back(mu);
    }
    return survivors;
}

f2::Vec triple_form(const StructureConstants& sc)
{
    const auto triples = symmetric_triples(sc.dims[1]);
    f2::Vec mu = 0;
    for (std::size_t t = 0; t < triples.size(); ++t)
        if (sc.triple(triples[t][0], triples[t][1], triples[t][2]))
            mu |= f2::Vec{1} << t;
    return mu;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Agree: return "agree";
    case Verdict::Disagree: return "disagree";
    case Verdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

bool OracleReport::all_agree() const
{
    return std::none_of(verdicts.begin(), verdicts.end(),
                        [](const VerdictEntry& e) { return e.verdict == Verdict::Disagree; });
}

namespace {

std::vector<std::string> basis_names(const H1Basis& basis)
{
    std::vector<std::string> names;
    for (const H1Class& c : basis.classes)
        names.push_back(c.name);
    return names;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string out;
    for (const auto& p : parts)
        out += (out.empty() ? "" : ", ") + p;
    return "{" + out + "}";
}

Verdict agree_if(bool ok) { return ok ? Verdict::Agree : Verdict::Disagree; }

}  // namespace

OracleReport verify(const SolGroupSpec& spec, const ClassifiedRing& classified)
{
    OracleReport report;
    const Presentation pres = presentation(spec);
    const auto names = basis_names(classified.basis);

    // (a) H^1: the basis must consist of homomorphisms spanning Hom(pi, F_2).
    const auto null_space = solve_mod(pres.abelianized(), 2);
    report.h1_dim = static_cast<int>(null_space.size());
    {
        std::vector<f2::Vec> values;
        bool classes_ok = true;
        for (const H1Class& c : classified.basis.classes) {
            classes_ok = classes_ok && is_class(pres, c.values);
            values.push_back(c.values);
        }
        const bool ok = classes_ok && f2::rank(values) == classified.basis.size() &&
                        classified.basis.size() == null_space.size() &&
                        static_cast<int>(classified.basis.size()) == classified.sc.dims[1];
        std::ostringstream detail;
        detail << "dim Hom(pi,F2) = " << null_space.size() << ", classifier basis size " << classified.basis.size();
        report.verdicts.push_back({"h1_basis", agree_if(ok), detail.str()});
    }

    // (b) abelianization by formula and by Smith form.
    {
        const AbelianGroup closed = abelianization_closed_form(spec);
        const AbelianGroup smith = abelianization_smith(spec);
        report.abelianization = smith;
        report.verdicts.push_back(
            {"abelianization", agree_if(closed == smith), closed.to_string() + " vs " + smith.to_string()});
    }

    // (c) degree-2 relations among products of degree-1 classes.
    const f2::Subspace oracle_kernel = h2_kernel(pres, generator_images(pres, classified.basis),
                                                 static_cast<int>(classified.basis.size()));
    report.h2_kernel_rank = oracle_kernel.dim();
    for (f2::Vec v : oracle_kernel.basis())
        report.h2_kernel.push_back(format_pair_vector(v, names));
    {
        const f2::Subspace ring_kernel = square_kernel(classified.sc);
        std::vector<std::string> ring_strings;
        for (f2::Vec v : ring_kernel.basis())
            ring_strings.push_back(format_pair_vector(v, names));
        report.verdicts.push_back({"h2_kernel", agree_if(ring_kernel == oracle_kernel),
                                   "oracle " + join(report.h2_kernel) + " vs ring " + join(ring_strings)});
    }

    // (d) triple products, when H^1 generates the ring.
    if (classified.basis.size() >= 3) {
        const auto survivors = triple_solutions(static_cast<int>(classified.basis.size()), oracle_kernel,
                                                classified.w1);
        report.triple_survivors = survivors.size();
        report.triple_unique = survivors.size() == 1;
        const f2::Vec mu = triple_form(classified.sc);
        const bool member = std::find(survivors.begin(), survivors.end(), mu) != survivors.end();
        std::string detail = member ? (report.triple_unique ? "unique - fully verified"
                                                            : "consistent - " + std::to_string(survivors.size()) +
                                                                  " forms satisfy the constraints")
                                    : "classifier form is not among " + std::to_string(survivors.size()) +
                                          " admissible forms";
        report.verdicts.push_back({"triple_products", agree_if(member), detail});
    } else {
        report.verdicts.push_back({"triple_products", Verdict::NotApplicable,
                                   "beta < 3: degree-2 generators carry the top products"});
    }

    // (e) duality and Wu.
    {
        bool pd = false;
        std::string detail = "pairing H^1 x H^2 -> H^3";
        try {
            pd = pd_check(classified.sc);
        } catch (const Error& e) {
            detail = e.what();
        }
        report.verdicts.push_back({"poincare_duality", agree_if(pd), detail});
        report.verdicts.push_back(
            {"wu_relation", agree_if(wu_check(classified.sc, classified.w1)), "w1 = " + classified.basis.name_of(classified.w1)});
    }
    return report;
}

Presentation d8_presentation()
{
    enum { t, y };
    Presentation p;
    p.generators = {"t", "y"};
    p.relators = {{{t, 2}}, {{y, 4}}, {{t, 1}, {y, 1}, {t, -1}, {y, 1}}};
    return p;
}

Presentation almost_extraspecial_presentation()
{
    enum { t, u, v };
    Presentation p;
    p.generators = {"t", "u", "v"};
    p.relators = {
        {{t, 2}},
        {{u, 2}, {v, -2}},
        {{t, 1}, {u, 1}, {t, -1}, {u, 1}},
        {{t, 1}, {v, 1}, {t, -1}, {v, -1}},
        {{u, 1}, {v, 1}, {u, -1}, {v, -1}},
    };
    return p;
}

std::vector<FixtureResult> run_fixtures()
{
    std::vector<FixtureResult> out;

    // Pair coordinates for k = 2: T^2, TY, Y^2. For k = 3: T^2, TU, TV, U^2, UV, V^2.
    constexpr f2::Vec kD8Relation = 0b110;       // TY + Y^2
    constexpr f2::Vec kERelation = 0b101010;     // TU + U^2 + V^2
    const std::vector<std::string> d8_names{"T", "Y"};
    const std::vector<std::string> e_names{"T", "U", "V"};

    {
        const f2::Subspace k = h2_kernel(d8_presentation(), {0b01, 0b10}, 2);
        const bool ok = k == f2::Subspace::span({kD8Relation});
        std::string detail = "dim " + std::to_string(k.dim());
        for (f2::Vec v : k.basis())
            detail += ", " + format_pair_vector(v, d8_names);
        out.push_back({"D8 kernel = span{TY + Y^2}", ok, detail});
    }
    {
        const f2::Subspace k = h2_kernel(almost_extraspecial_presentation(), {0b001, 0b010, 0b100}, 3);
        const bool ok = k == f2::Subspace::span({kERelation});
        std::string detail = "dim " + std::to_string(k.dim());
        for (f2::Vec v : k.basis())
            detail += ", " + format_pair_vector(v, e_names);
        out.push_back({"E kernel = span{TU + U^2 + V^2}", ok, detail});
    }
    {
        // <t, u> in E is D8 (y -> u); V restricts to zero, so the E relation
        // must pull back to a vanishing class on D8.
        const bool pulled = relation_vanishes(d8_presentation(), {0b001, 0b010},
                                              Cocycle(QuadraticCocycle{3, kERelation}));
        out.push_back({"E relation restricts to D8 = <t,u>", pulled, "pullback along t->t, y->u"});
    }
    {
        int groups = 0;
        int nonzero_k3 = 0;
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            const std::size_t pairs = symmetric_pairs(k).size();
            for (f2::Vec coeffs = 0; coeffs < (f2::Vec{1} << pairs); ++coeffs) {
                ok = ok && ExtensionGroup(Cocycle(QuadraticCocycle{k, coeffs})).satisfies_group_axioms();
                ++groups;
                if (k == 3 && coeffs != 0)
                    ++nonzero_k3;
            }
        }
        out.push_back({"extension group axioms", ok,
                       std::to_string(groups) + " groups checked, " + std::to_string(nonzero_k3) +
                           " nontrivial of order 16"});
    }
    return out;
}

}  // namespace sol3
