#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "sol3/buindex.hpp"
#include "support.hpp"

using namespace sol3;

namespace {

std::map<std::string, int> indices(const SolGroupSpec& spec)
{
    std::map<std::string, int> out;
    for (const BUEntry& e : bu_rules(spec, classify(spec)).entries)
        out[e.name] = e.index;
    return out;
}

// Search for an integral homomorphism with small values reducing to phi.
bool brute_force_integral_lift(const SolGroupSpec& spec, f2::Vec values)
{
    const IntMatrix a = presentation(spec).abelianized();
    for (Int x = -3; x <= 3; ++x)
        for (Int y = -3; y <= 3; ++y)
            for (Int z = -3; z <= 3; ++z) {
                const Int v[3] = {x, y, z};
                bool reduces = true;
                for (int g = 0; g < 3; ++g)
                    reduces = reduces && floor_mod(v[g], 2) == static_cast<Int>(f2::bit(values, g));
                if (!reduces || (x == 0 && y == 0 && z == 0))
                    continue;
                bool ok = true;
                for (std::size_t r = 0; r < a.rows() && ok; ++r)
                    ok = a(r, 0) * x + a(r, 1) * y + a(r, 2) * z == 0;
                if (ok)
                    return true;
            }
    return false;
}

}  // namespace

TEST_CASE("C6a indices")
{
    const auto bu = indices(SolGroupSpec::mapping_torus(1, 2, 2, 5));
    CHECK(bu.at("rho") == 1);
    for (const char* phi : {"sigma", "psi", "rho+sigma", "rho+psi"})
        CHECK(bu.at(phi) == 3);
    for (const char* phi : {"sigma+psi", "rho+sigma+psi"})
        CHECK(bu.at(phi) == 2);
}

TEST_CASE("C7 indices")
{
    for (const auto& [phi, index] : indices(SolGroupSpec::mapping_torus(7, 4, 12, 7)))
        CHECK(index == (phi == "rho" ? 1 : 2));
}

TEST_CASE("C9 indices")
{
    for (const auto& [phi, index] : indices(SolGroupSpec::mapping_torus(1, 2, 2, 3)))
        CHECK(index == (phi == "rho" ? 1 : 3));
}

TEST_CASE("union indices")
{
    const auto b2 = indices(SolGroupSpec::twisted_union(1, 2, 1, 3));
    for (const char* phi : {"U", "V", "U+V"})
        CHECK(b2.at(phi) == 2);
    for (const char* phi : {"Y", "U+Y", "V+Y", "U+V+Y"})
        CHECK(b2.at(phi) == 3);

    for (const auto& [phi, index] : indices(SolGroupSpec::twisted_union(1, 1, 1, 2)))
        CHECK(index == 2);
    for (const auto& [phi, index] : indices(SolGroupSpec::twisted_union(1, 4, 1, 5)))
        CHECK(index == 2);
}

TEST_CASE("generic index")
{
    const auto spec = SolGroupSpec::mapping_torus(1, 2, 2, 3);
    const ClassifiedRing cr = classify(spec);
    CHECK(bu_generic(spec, cr, 0b001) == 1);
    CHECK(bu_generic(spec, cr, 0b010) == 3);
    CHECK_ERROR(bu_generic(spec, cr, 0), ErrorCode::ZeroClass);
}

TEST_CASE("integral lifts match a brute-force search")
{
    for (Family f : {Family::MappingTorus, Family::TwistedUnion})
        for (Int a = -4; a <= 4; ++a)
            for (Int b = -4; b <= 4; ++b)
                for (Int c = -4; c <= 4; ++c)
                    for (Int d = -4; d <= 4; ++d) {
                        const SolGroupSpec s{f, a, b, c, d};
                        if (!is_valid(s))
                            continue;
                        const H1Basis basis = h1_basis(s);
                        for (f2::Vec phi = 1; phi < (f2::Vec{1} << basis.size()); ++phi) {
                            const f2::Vec values = basis.evaluate(phi);
                            CHECK(lifts_integrally(s, values) == brute_force_integral_lift(s, values));
                        }
                    }
}

TEST_CASE("rule table agrees with the definition on a scan")
{
    int tables = 0;
    for (Family f : {Family::MappingTorus, Family::TwistedUnion})
        for (Int a = -7; a <= 7; ++a)
            for (Int b = -7; b <= 7; ++b)
                for (Int c = -7; c <= 7; ++c)
                    for (Int d = -7; d <= 7; ++d) {
                        const SolGroupSpec s{f, a, b, c, d};
                        if (!is_valid(s))
                            continue;
                        const BUTable t = bu_rules(s, classify(s));
                        CHECK(t.counting_invariants_hold());
                        ++tables;
                    }
    CHECK(tables == 824 + 896);
}
