#include "sol3/solgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sol3/error.hpp"

namespace sol3 {

namespace {

constexpr Int kMaxEntry = 1'000'000'000;

void check_entry_range(const SolGroupSpec& spec)
{
    for (Int x : {spec.a, spec.b, spec.c, spec.d})
        if (x > kMaxEntry || x < -kMaxEntry)
            throw Error(ErrorCode::Overflow, "matrix entries must satisfy |x| <= 1e9: " + spec.to_string());
}

Int abs_value(Int x) { return x < 0 ? -x : x; }

}  // namespace

const char* to_string(Family family)
{
    return family == Family::MappingTorus ? "mapping-torus" : "union";
}

Family parse_family(const std::string& text)
{
    if (text == "mapping-torus" || text == "mt")
        return Family::MappingTorus;
    if (text == "union" || text == "twisted-union")
        return Family::TwistedUnion;
    throw Error(ErrorCode::Parse, "unknown family '" + text + "' (expected mapping-torus or union)");
}

std::string SolGroupSpec::to_string() const
{
    std::ostringstream os;
    os << sol3::to_string(family) << '(' << a << ',' << b << ',' << c << ',' << d << ')';
    return os.str();
}

IntMatrix Presentation::abelianized() const
{
    IntMatrix m(relators.size(), generators.size());
    for (std::size_t r = 0; r < relators.size(); ++r)
        for (const Syllable& s : relators[r])
            m(r, s.generator) = checked_add(m(r, s.generator), s.exponent);
    return m;
}

Presentation presentation(const SolGroupSpec& spec)
{
    const Int a = spec.a, b = spec.b, c = spec.c, d = spec.d;
    Presentation p;
    if (spec.family == Family::MappingTorus) {
        enum { t, x, y };
        p.generators = {"t", "x", "y"};
        p.relators = {
            {{t, 1}, {x, 1}, {t, -1}, {x, -a}, {y, -b}},
            {{t, 1}, {y, 1}, {t, -1}, {x, -c}, {y, -d}},
            {{x, 1}, {y, 1}, {x, -1}, {y, -1}},
        };
    } else {
        enum { u, v, y };
        p.generators = {"u", "v", "y"};
        p.relators = {
            {{u, 1}, {y, 1}, {u, -1}, {y, 1}},
            {{v, -2}, {u, checked_mul(2, a)}, {y, b}},
            {{v, 1}, {u, checked_mul(2, c)}, {y, d}, {v, -1}, {y, d}, {u, checked_mul(2, c)}},
        };
    }
    return p;
}

f2::Vec H1Basis::evaluate(f2::Vec coords) const
{
    f2::Vec out = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (f2::bit(coords, static_cast<int>(i)))
            out ^= classes[i].values;
    return out;
}

std::string H1Basis::name_of(f2::Vec coords) const
{
    std::string out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (f2::bit(coords, static_cast<int>(i))) {
            if (!out.empty())
                out += '+';
            out += classes[i].name;
        }
    return out.empty() ? "0" : out;
}

bool is_valid(const SolGroupSpec& spec)
{
    const Mat2Z m = spec.matrix();
    const Int det = m.det();
    if (det != 1 && det != -1)
        return false;
    if (spec.family == Family::MappingTorus) {
        const Int tau = m.trace();
        if (det == 1)
            return abs_value(tau) > 2;
        return tau != 0;
    }
    return spec.a != 0 && spec.b != 0 && spec.c != 0 && spec.d != 0;
}

AbelianGroup abelianization_closed_form(const SolGroupSpec& spec)
{
    const Mat2Z m = spec.matrix();
    if (spec.family == Family::MappingTorus) {
        const Int delta1 = 1 - m.trace() + m.det();
        const Int delta2 = gcd(gcd(m.a - 1, m.b), gcd(m.c, m.d - 1));
        return AbelianGroup::from_cyclic_factors(1, {delta1 / delta2, delta2});
    }
    const Int four_c = checked_mul(4, spec.c);
    if (spec.b % 2 != 0)
        return AbelianGroup::from_cyclic_factors(0, {four_c, 4});
    return AbelianGroup::from_cyclic_factors(0, {four_c, 2, 2});
}

AbelianGroup abelianization_smith(const SolGroupSpec& spec)
{
    return cokernel(presentation(spec).abelianized());
}

AbelianGroup abelianization(const SolGroupSpec& spec)
{
    AbelianGroup closed = abelianization_closed_form(spec);
    AbelianGroup smith = abelianization_smith(spec);
    if (!(closed == smith))
        throw std::logic_error("abelianization mismatch for " + spec.to_string() + ": closed form " +
                               closed.to_string() + " vs Smith form " + smith.to_string());
    return smith;
}

bool is_class(const Presentation& pres, f2::Vec generator_values)
{
    const IntMatrix a = pres.abelianized();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Int acc = 0;
        for (std::size_t g = 0; g < a.cols(); ++g)
            if (f2::bit(generator_values, static_cast<int>(g)))
                acc += floor_mod(a(r, g), 2);
        if (acc % 2 != 0)
            return false;
    }
    return true;
}

H1Basis h1_basis(const SolGroupSpec& spec)
{
    if (!is_valid(spec))
        validate(spec);  // throws with the right code
    H1Basis basis;
    const Int a = spec.a, b = spec.b, c = spec.c, d = spec.d;
    if (spec.family == Family::MappingTorus) {
        basis.classes.push_back({"rho", 0b001});
        std::vector<f2::Vec> fibre;  // nonzero (phi(x), phi(y)) killing the relators
        for (int fx = 0; fx < 2; ++fx)
            for (int fy = 0; fy < 2; ++fy) {
                if (fx == 0 && fy == 0)
                    continue;
                if (floor_mod((a - 1) * fx + b * fy, 2) == 0 && floor_mod(c * fx + (d - 1) * fy, 2) == 0)
                    fibre.push_back(static_cast<f2::Vec>(fx << 1 | fy << 2));
            }
        if (fibre.size() == 3) {
            basis.classes.push_back({"sigma", 0b010});
            basis.classes.push_back({"psi", 0b100});
        } else if (fibre.size() == 1) {
            basis.classes.push_back({"sigma", fibre.front()});
        }
    } else if (b % 2 != 0) {
        basis.classes.push_back({"U", static_cast<f2::Vec>(0b001 | (floor_mod(a, 2) << 1))});
        basis.classes.push_back({"V", 0b010});
    } else {
        basis.classes.push_back({"U", 0b001});
        basis.classes.push_back({"V", 0b010});
        basis.classes.push_back({"Y", 0b100});
    }

    // The conventions above must span Hom(pi, F_2) exactly.
    const Presentation pres = presentation(spec);
    const auto null_space = solve_mod(pres.abelianized(), 2);
    std::vector<f2::Vec> values;
    for (const H1Class& cls : basis.classes) {
        if (!is_class(pres, cls.values))
            throw std::logic_error("basis class " + cls.name + " is not a homomorphism for " + spec.to_string());
        values.push_back(cls.values);
    }
    if (f2::rank(values) != basis.size() || null_space.size() != basis.size())
        throw std::logic_error("H^1 basis does not span Hom(pi, F_2) for " + spec.to_string());
    return basis;
}

GroupInvariants validate(const SolGroupSpec& spec)
{
    check_entry_range(spec);
    const Mat2Z m = spec.matrix();
    const Int det = m.det();
    GroupInvariants inv;

    if (spec.family == Family::MappingTorus) {
        if (!is_valid(spec))
            throw Error(ErrorCode::NotSol, "not a Sol matrix: " + spec.to_string());
        inv.epsilon = static_cast<int>(det);
        inv.tau = m.trace();
        const Int delta1 = 1 - inv.tau + det;
        const Int delta2 = gcd(gcd(m.a - 1, m.b), gcd(m.c, m.d - 1));
        if (delta1 % checked_mul(delta2, delta2) != 0)
            throw std::logic_error("delta2^2 does not divide delta1 for " + spec.to_string());
        inv.delta1 = delta1;
        inv.delta2 = delta2;
        if (delta2 % 2 == 0) {
            inv.k = two_adic_valuation(delta1);
            inv.l = two_adic_valuation(delta2);
            if (!(*inv.l > 0 && 2 * *inv.l <= *inv.k))
                throw std::logic_error("2-adic valuations out of range for " + spec.to_string());
        }
        inv.orientable = det == 1;
        inv.w1 = inv.orientable ? 0 : 0b001;  // rho
    } else {
        if (!is_valid(spec))
            throw Error(ErrorCode::NotUnion, "not a twisted I-bundle union: " + spec.to_string());
        inv.epsilon = static_cast<int>(det);
        inv.tau = m.trace();
        inv.orientable = true;
        inv.w1 = 0;
    }

    inv.abelianization = abelianization(spec);
    inv.beta = inv.abelianization.mod2_rank();
    if (inv.beta < 1 || inv.beta > 3)
        throw std::logic_error("beta out of range for " + spec.to_string());
    if (h1_basis(spec).size() != static_cast<std::size_t>(inv.beta))
        throw std::logic_error("beta disagrees with the H^1 basis for " + spec.to_string());
    return inv;
}

bool square_test(const Presentation& pres, f2::Vec generator_values)
{
    if (!is_class(pres, generator_values))
        throw Error(ErrorCode::NotAClass, "not a homomorphism to Z/2");
    const IntMatrix a = pres.abelianized();
    const std::size_t n = a.cols();
    for (f2::Vec lift = 0; lift < (f2::Vec{1} << n); ++lift) {
        bool ok = true;
        for (std::size_t r = 0; r < a.rows() && ok; ++r) {
            Int acc = 0;
            for (std::size_t g = 0; g < n; ++g) {
                const Int value = (f2::bit(generator_values, static_cast<int>(g)) ? 1 : 0) +
                                  (f2::bit(lift, static_cast<int>(g)) ? 2 : 0);
                acc += floor_mod(a(r, g), 4) * value;
            }
            ok = acc % 4 == 0;
        }
        if (ok)
            return true;
    }
    return false;
}

bool square_test(const SolGroupSpec& spec, f2::Vec generator_values)
{
    return square_test(presentation(spec), generator_values);
}

Mat2Z induced_monodromy(const SolGroupSpec& union_spec)
{
    if (union_spec.family != Family::TwistedUnion)
        throw Error(ErrorCode::NotUnion, "induced monodromy needs a twisted union: " + union_spec.to_string());
    validate(union_spec);
    const Int a = union_spec.a, b = union_spec.b, c = union_spec.c, d = union_spec.d;
    const Int eta = union_spec.matrix().det();
    const Int diag = checked_add(checked_mul(a, d), checked_mul(b, c));
    Mat2Z psi;
    psi.a = checked_mul(eta, diag);
    psi.b = checked_mul(eta, checked_mul(2, checked_mul(b, d)));
    psi.c = checked_mul(eta, checked_mul(2, checked_mul(a, c)));
    psi.d = psi.a;

    const Int tr = psi.trace();
    const bool ok = psi.det() == 1 && floor_mod(psi.a - 1, 2) == 0 && floor_mod(psi.b, 2) == 0 &&
                    floor_mod(psi.c, 2) == 0 && floor_mod(psi.d - 1, 2) == 0 && floor_mod(tr, 4) == 2 &&
                    abs_value(tr) >= 6;
    if (!ok)
        throw std::logic_error("induced monodromy fails its congruences for " + union_spec.to_string());
    return psi;
}

namespace {

// Signed divisors of n != 0, ordered by absolute value, positive first.
std::vector<Int> signed_divisors(Int n)
{
    n = abs_value(n);
    std::vector<Int> out;
    for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
            out.push_back(i);
            if (i != n / i)
                out.push_back(n / i);
        }
    std::sort(out.begin(), out.end());
    std::vector<Int> signed_out;
    for (Int x : out) {
        signed_out.push_back(x);
        signed_out.push_back(-x);
    }
    return signed_out;
}

}  // namespace

DoubleCoverFactorization double_cover_factorization(const Mat2Z& p)
{
    for (Int x : {p.a, p.b, p.c, p.d})
        if (x > kMaxEntry || x < -kMaxEntry)
            throw Error(ErrorCode::BadShape, "matrix entries must satisfy |x| <= 1e9");
    const bool shape = p.a == p.d && floor_mod(p.a, 2) == 1 && floor_mod(p.b, 2) == 0 &&
                       floor_mod(p.c, 2) == 0 && p.det() == 1 && p.b != 0 && p.c != 0;
    if (!shape)
        throw Error(ErrorCode::BadShape, "expected an SL(2,Z) matrix with diagonal 2k+1 and nonzero even "
                                         "off-diagonal entries");
    DoubleCoverFactorization f;
    f.k = (p.a - 1) / 2;
    f.m = p.c / 2;
    f.n = p.b / 2;
    if (checked_mul(f.k, f.k + 1) != checked_mul(f.m, f.n))
        throw Error(ErrorCode::BadShape, "k(k+1) != mn");

    for (Int m1 : signed_divisors(f.m)) {
        if (f.k % m1 != 0)
            continue;
        const Int n1 = f.k / m1;
        if (n1 == 0 || f.n % n1 != 0)
            continue;
        const Int n2 = f.n / n1;
        const Int m2 = f.m / m1;
        if (checked_mul(m2, n2) != f.k + 1)
            continue;
        f.m1 = m1;
        f.m2 = m2;
        f.n1 = n1;
        f.n2 = n2;
        // Displayed as (m2 m1; n1 n2): det = (k+1) - k = 1, so the monodromy
        // of uv reproduces P itself.
        f.union_spec = SolGroupSpec::twisted_union(m2, n1, m1, n2);
        if (!(induced_monodromy(f.union_spec) == p))
            throw std::logic_error("double cover factorization does not reproduce P");
        return f;
    }
    throw std::logic_error("no factorization found although k(k+1) = mn");
}

bool realizable_trace(Int tau, int epsilon)
{
    return epsilon == 1 && abs_value(tau) > 2 && floor_mod(tau, 4) == 2;
}

}  // namespace sol3
