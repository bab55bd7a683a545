#include "sol3/ringalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sol3/error.hpp"

namespace sol3 {

void Polynomial::toggle(const Monomial& m)
{
    auto it = terms_.find(m);
    if (it == terms_.end())
        terms_.insert(m);
    else
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    for (const Monomial& m : rhs.terms_)
        toggle(m);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const
{
    Polynomial out;
    for (const Monomial& x : terms_)
        for (const Monomial& y : rhs.terms_) {
            Monomial z(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                z[i] = static_cast<std::uint8_t>(x[i] + y[i]);
            out.toggle(z);
        }
    return out;
}

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

void enumerate_monomials(const std::vector<RingGenerator>& gens, std::size_t index, int remaining,
                         Monomial& current, std::vector<Monomial>& out)
{
    if (index == gens.size()) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    const int deg = gens[index].degree;
    for (int e = remaining / deg; e >= 0; --e) {
        current[index] = static_cast<std::uint8_t>(e);
        enumerate_monomials(gens, index + 1, remaining - e * deg, current, out);
    }
    current[index] = 0;
}

struct DegreeComponent {
    std::vector<Monomial> monomials;
    std::map<Monomial, int> index;
    f2::Subspace ideal;
    std::vector<int> basis;           // monomial indices of the quotient basis
    std::map<int, int> basis_position;  // monomial index -> basis slot

    f2::Vec encode(const Polynomial& p) const
    {
        f2::Vec v = 0;
        for (const Monomial& m : p.terms())
            v ^= f2::Vec{1} << index.at(m);
        return v;
    }

    f2::Vec coordinates(const Polynomial& p) const
    {
        const f2::Vec reduced = ideal.reduce(encode(p));
        f2::Vec out = 0;
        for (const auto& [mono, slot] : basis_position)
            if (f2::bit(reduced, mono))
                out |= f2::Vec{1} << slot;
        return out;
    }
};

void check_homogeneous(const GradedRingF2& ring)
{
    for (const Polynomial& r : ring.relations) {
        if (r.is_zero())
            continue;
        const int deg = ring.degree(*r.terms().begin());
        for (const Monomial& m : r.terms())
            if (ring.degree(m) != deg)
                throw Error(ErrorCode::NonHomogeneous, "relation " + ring.format(r) + " is not homogeneous");
    }
}

DegreeComponent build_component(const GradedRingF2& ring, int degree)
{
    DegreeComponent comp;
    comp.monomials = ring.monomials(degree);
    if (comp.monomials.size() > 64)
        throw Error(ErrorCode::BadDims, "too many monomials in one degree");
    for (std::size_t i = 0; i < comp.monomials.size(); ++i)
        comp.index[comp.monomials[i]] = static_cast<int>(i);

    for (const Polynomial& r : ring.relations) {
        if (r.is_zero())
            continue;
        const int rdeg = ring.degree(*r.terms().begin());
        if (rdeg > degree)
            continue;
        for (const Monomial& m : ring.monomials(degree - rdeg))
            comp.ideal.insert(comp.encode(Polynomial(m) * r));
    }
    const f2::Vec pivots = comp.ideal.pivot_mask();
    for (std::size_t i = 0; i < comp.monomials.size(); ++i)
        if (!f2::bit(pivots, static_cast<int>(i))) {
            comp.basis_position[static_cast<int>(i)] = static_cast<int>(comp.basis.size());
            comp.basis.push_back(static_cast<int>(i));
        }
    return comp;
}

}  // namespace

GradedRingF2 GradedRingF2::parse(std::vector<RingGenerator> generators, const std::vector<std::string>& relations)
{
    GradedRingF2 ring;
    ring.generators = std::move(generators);
    for (const std::string& text : relations)
        ring.relations.push_back(ring.parse_polynomial(text));
    return ring;
}

Polynomial GradedRingF2::parse_polynomial(const std::string& text) const
{
    Polynomial poly;
    for (const std::string& raw_term : split(text, '+')) {
        const std::string term = trim(raw_term);
        if (term.empty())
            throw Error(ErrorCode::Parse, "empty term in '" + text + "'");
        Monomial m(generators.size(), 0);
        for (const std::string& raw_factor : split(term, '*')) {
            std::string factor = trim(raw_factor);
            int power = 1;
            if (auto caret = factor.find('^'); caret != std::string::npos) {
                const std::string exp = trim(factor.substr(caret + 1));
                if (exp.empty() || !std::all_of(exp.begin(), exp.end(), ::isdigit))
                    throw Error(ErrorCode::Parse, "bad exponent in '" + text + "'");
                power = std::stoi(exp);
                factor = trim(factor.substr(0, caret));
            }
            auto it = std::find_if(generators.begin(), generators.end(),
                                   [&](const RingGenerator& g) { return g.name == factor; });
            if (it == generators.end())
                throw Error(ErrorCode::Parse, "unknown generator '" + factor + "' in '" + text + "'");
            m[it - generators.begin()] = static_cast<std::uint8_t>(m[it - generators.begin()] + power);
        }
        poly.toggle(m);
    }
    return poly;
}

int GradedRingF2::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * generators[i].degree;
    return d;
}

std::string GradedRingF2::format(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += generators[i].name;
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string GradedRingF2::format(const Polynomial& p) const
{
    if (p.is_zero())
        return "0";
    // Canonical order: by degree, then the monomial enumeration order.
    std::vector<Monomial> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const Monomial& x, const Monomial& y) {
        const int dx = degree(x), dy = degree(y);
        if (dx != dy)
            return dx < dy;
        return x > y;
    });
    std::string out;
    for (const Monomial& m : terms) {
        if (!out.empty())
            out += " + ";
        out += format(m);
    }
    return out;
}

std::vector<std::string> GradedRingF2::relation_strings() const
{
    std::vector<std::string> out;
    for (const Polynomial& r : relations)
        out.push_back(format(r));
    return out;
}

std::vector<Monomial> GradedRingF2::monomials(int degree) const
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    Monomial current(generators.size(), 0);
    enumerate_monomials(generators, 0, degree, current, out);
    return out;
}

GradedRingF2 GradedRingF2::relabel(const std::vector<int>& permutation) const
{
    GradedRingF2 out;
    out.generators = generators;
    for (const Polynomial& r : relations) {
        Polynomial moved;
        for (const Monomial& m : r.terms()) {
            Monomial n(m.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i)
                n[permutation[i]] = m[i];
            moved.toggle(n);
        }
        out.relations.push_back(moved);
    }
    return out;
}

f2::Vec StructureConstants::product11(f2::Vec x, f2::Vec y) const
{
    f2::Vec out = 0;
    for (int i = 0; i < dims[1]; ++i)
        for (int j = 0; j < dims[1]; ++j)
            if (f2::bit(x, i) && f2::bit(y, j))
                out ^= mul12[i][j];
    return out;
}

f2::Vec StructureConstants::product12(f2::Vec x, f2::Vec h2) const
{
    f2::Vec out = 0;
    for (int i = 0; i < dims[1]; ++i)
        for (int q = 0; q < dims[2]; ++q)
            if (f2::bit(x, i) && f2::bit(h2, q))
                out ^= mul13[i][q];
    return out;
}

f2::Vec StructureConstants::cube_of(f2::Vec x) const { return product12(x, product11(x, x)); }

int StructureConstants::triple(int i, int j, int k) const
{
    return static_cast<int>(product12(f2::Vec{1} << k, mul12[i][j]) & 1U);
}

StructureConstants normalize(const GradedRingF2& ring)
{
    check_homogeneous(ring);
    std::array<DegreeComponent, 4> comps;
    StructureConstants sc;
    for (int n = 0; n < 4; ++n) {
        comps[n] = build_component(ring, n);
        sc.dims[n] = static_cast<int>(comps[n].basis.size());
        for (int idx : comps[n].basis)
            sc.bases[n].push_back(ring.format(comps[n].monomials[idx]));
    }

    auto basis_poly = [&](int degree, int slot) { return Polynomial(comps[degree].monomials[comps[degree].basis[slot]]); };

    sc.mul12.assign(sc.dims[1], std::vector<f2::Vec>(sc.dims[1], 0));
    for (int i = 0; i < sc.dims[1]; ++i)
        for (int j = 0; j < sc.dims[1]; ++j)
            sc.mul12[i][j] = comps[2].coordinates(basis_poly(1, i) * basis_poly(1, j));
    sc.mul13.assign(sc.dims[1], std::vector<f2::Vec>(sc.dims[2], 0));
    for (int i = 0; i < sc.dims[1]; ++i)
        for (int q = 0; q < sc.dims[2]; ++q)
            sc.mul13[i][q] = comps[3].coordinates(basis_poly(1, i) * basis_poly(2, q));

    if (sc.dims[3] == 1 && sc.dims[1] < 64)
        sc.cube = cube_table(sc);
    return sc;
}

f2::Subspace ideal_component(const GradedRingF2& ring, int degree)
{
    check_homogeneous(ring);
    return build_component(ring, degree).ideal;
}

bool same_ideal(const GradedRingF2& lhs, const GradedRingF2& rhs, int max_degree)
{
    if (lhs.generators.size() != rhs.generators.size())
        return false;
    for (std::size_t i = 0; i < lhs.generators.size(); ++i)
        if (lhs.generators[i].name != rhs.generators[i].name || lhs.generators[i].degree != rhs.generators[i].degree)
            return false;
    for (int n = 0; n <= max_degree; ++n)
        if (!(ideal_component(lhs, n) == ideal_component(rhs, n)))
            return false;
    return true;
}

bool pd_check(const StructureConstants& sc)
{
    if (sc.dims[0] != 1 || sc.mul13.size() != static_cast<std::size_t>(sc.dims[1]))
        throw Error(ErrorCode::BadDims, "structure constants do not match their dims");
    if (sc.dims[3] != 1 || sc.dims[1] != sc.dims[2])
        return false;
    std::vector<f2::Vec> rows;
    for (int i = 0; i < sc.dims[1]; ++i) {
        f2::Vec row = 0;
        for (int q = 0; q < sc.dims[2]; ++q)
            if (sc.mul13[i][q] & 1U)
                row |= f2::Vec{1} << q;
        rows.push_back(row);
    }
    return f2::rank(rows) == static_cast<std::size_t>(sc.dims[1]);
}

bool wu_check(const StructureConstants& sc, f2::Vec w)
{
    for (int i = 0; i < sc.dims[1]; ++i)
        for (int j = 0; j < sc.dims[1]; ++j) {
            const f2::Vec a = f2::Vec{1} << i;
            const f2::Vec b = f2::Vec{1} << j;
            const f2::Vec lhs = sc.product12(w, sc.product11(a, b));
            const f2::Vec rhs = sc.product12(b, sc.product11(a, a)) ^ sc.product12(a, sc.product11(b, b));
            if (lhs != rhs)
                return false;
        }
    return true;
}

bool associativity_check(const StructureConstants& sc)
{
    for (int i = 0; i < sc.dims[1]; ++i)
        for (int j = 0; j < sc.dims[1]; ++j)
            for (int k = 0; k < sc.dims[1]; ++k) {
                const f2::Vec left = sc.product12(f2::Vec{1} << k, sc.mul12[i][j]);
                const f2::Vec right = sc.product12(f2::Vec{1} << i, sc.mul12[j][k]);
                if (left != right)
                    return false;
            }
    return true;
}

std::map<f2::Vec, int> cube_table(const StructureConstants& sc)
{
    if (sc.dims[3] != 1)
        throw Error(ErrorCode::BadDims, "cube table needs a one-dimensional top degree");
    std::map<f2::Vec, int> out;
    for (f2::Vec x = 1; x < (f2::Vec{1} << sc.dims[1]); ++x)
        out[x] = static_cast<int>(sc.cube_of(x) & 1U);
    return out;
}

std::vector<std::pair<int, int>> symmetric_pairs(int k)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            out.emplace_back(i, j);
    return out;
}

std::vector<std::array<int, 3>> symmetric_triples(int k)
{
    std::vector<std::array<int, 3>> out;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j)
            for (int l = j; l < k; ++l)
                out.push_back({i, j, l});
    return out;
}

f2::Subspace square_kernel(const StructureConstants& sc)
{
    const auto pairs = symmetric_pairs(sc.dims[1]);
    if (pairs.size() > 20)
        throw Error(ErrorCode::BadDims, "H^1 too large for the symmetric-square scan");
    f2::Subspace kernel;
    for (f2::Vec v = 1; v < (f2::Vec{1} << pairs.size()); ++v) {
        f2::Vec image = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (f2::bit(v, static_cast<int>(p)))
                image ^= sc.mul12[pairs[p].first][pairs[p].second];
        if (image == 0)
            kernel.insert(v);
    }
    return kernel;
}

std::string format_pair_vector(f2::Vec v, const std::vector<std::string>& names)
{
    const auto pairs = symmetric_pairs(static_cast<int>(names.size()));
    std::string out;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!f2::bit(v, static_cast<int>(p)))
            continue;
        if (!out.empty())
            out += " + ";
        const auto [i, j] = pairs[p];
        out += i == j ? names[i] + "^2" : names[i] + "*" + names[j];
    }
    return out.empty() ? "0" : out;
}

}  // namespace sol3
