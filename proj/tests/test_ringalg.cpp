#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sol3/ringalg.hpp"
#include "support.hpp"

using namespace sol3;

namespace {

GradedRingF2 rsp(const std::vector<std::string>& rels)
{
    return GradedRingF2::parse({{"rho", 1}, {"sigma", 1}, {"psi", 1}}, rels);
}

GradedRingF2 uvy(const std::vector<std::string>& rels)
{
    return GradedRingF2::parse({{"U", 1}, {"V", 1}, {"Y", 1}}, rels);
}

// Independent cube: expand (sum x_i g_i)^3 over F_2 as a polynomial, then
// test membership of the degree-3 part in the ideal.
int cube_by_expansion(const GradedRingF2& ring, f2::Vec coords)
{
    Polynomial phi;
    for (std::size_t i = 0; i < ring.generators.size(); ++i)
        if (f2::bit(coords, static_cast<int>(i))) {
            Monomial m(ring.generators.size(), 0);
            m[i] = 1;
            phi += Polynomial(m);
        }
    const Polynomial cube = phi * phi * phi;
    const auto monos = ring.monomials(3);
    f2::Vec v = 0;
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (cube.terms().count(monos[i]))
            v |= f2::Vec{1} << i;
    return ideal_component(ring, 3).contains(v) ? 0 : 1;
}

}  // namespace

TEST_CASE("parse and format")
{
    const auto r = rsp({"rho^2", "rho*psi + sigma^2"});
    CHECK(r.relations.size() == 2);
    CHECK(r.relation_strings() == std::vector<std::string>{"rho^2", "rho*psi + sigma^2"});
    CHECK(r.parse_polynomial("sigma*sigma + sigma^2").is_zero());
    CHECK(r.monomials(2).size() == 6);
    CHECK(r.monomials(3).size() == 10);
    CHECK(r.format(r.monomials(2).front()) == "rho^2");
    CHECK_ERROR(normalize(rsp({"rho + sigma^2"})), ErrorCode::NonHomogeneous);
    CHECK_ERROR(rsp({"theta^2"}), ErrorCode::Parse);
}

TEST_CASE("normalize the case-4 ring")
{
    const auto sc = normalize(rsp({"rho^2", "sigma^2", "psi^2"}));
    CHECK(sc.dims == std::array<int, 4>{1, 3, 3, 1});
    CHECK(sc.bases[3] == std::vector<std::string>{"rho*sigma*psi"});
    for (f2::Vec v : {0b001, 0b010, 0b100, 0b111})
        CHECK(sc.cube_of(v) == 0);
    CHECK(pd_check(sc));
    CHECK(wu_check(sc, 0));
    CHECK_FALSE(wu_check(sc, 0b001));
    CHECK(sc.triple(0, 1, 2) == 1);
    CHECK(sc.triple(0, 0, 1) == 0);
    CHECK(associativity_check(sc));
}

TEST_CASE("union rings with b even")
{
    const auto zero = normalize(uvy({"U*V", "U^2 + V^2", "U*Y + V*Y + Y^2"}));
    CHECK(zero.dims == std::array<int, 4>{1, 3, 3, 1});
    CHECK(zero.cube_of(0b100) == 0);

    const auto nonzero = normalize(uvy({"U*V", "U^2 + V^2", "U*Y + V*Y + U^2 + Y^2"}));
    CHECK(nonzero.cube_of(0b100) == 1);
}

TEST_CASE("duality")
{
    CHECK_FALSE(pd_check(normalize(rsp({"rho^2", "rho*sigma", "rho*psi", "sigma^2", "sigma*psi", "psi^2"}))));
    CHECK_FALSE(pd_check(normalize(rsp({"rho^2", "rho*sigma", "rho*psi"}))));
    StructureConstants broken;
    broken.dims = {1, 2, 2, 1};
    CHECK_ERROR(pd_check(broken), ErrorCode::BadDims);
}

TEST_CASE("wu relation")
{
    const auto c8 = normalize(rsp({"rho^2", "sigma^2", "rho*psi + psi^2"}));
    CHECK(wu_check(c8, 0b001));
    CHECK_FALSE(wu_check(c8, 0));
}

TEST_CASE("cube facts")
{
    const auto c7 = normalize(rsp({"rho^2", "rho*sigma + sigma^2", "rho*psi + psi^2"}));
    for (f2::Vec v = 1; v < 8; ++v)
        CHECK(c7.cube_of(v) == 0);

    const auto c9 = normalize(rsp({"rho^2", "sigma^2 + rho*psi", "psi^2 + rho*sigma + rho*psi"}));
    CHECK(c9.cube_of(0b001) == 0);
    for (f2::Vec v = 2; v < 8; ++v)
        CHECK(c9.cube_of(v) == 1);
    CHECK(cube_table(c9).size() == 7);

    // Expansion oracle on a handful of rings.
    for (const auto& ring : {rsp({"rho^2", "sigma^2", "psi^2"}), rsp({"rho^2", "rho*psi + sigma^2", "rho*sigma + psi^2"}),
                             rsp({"rho^2", "sigma^2 + rho*psi", "psi^2 + rho*sigma + rho*psi"}),
                             uvy({"U*V", "U^2 + V^2", "U*Y + V*Y + U^2 + Y^2"})}) {
        const auto sc = normalize(ring);
        for (f2::Vec v = 1; v < 8; ++v)
            CHECK(sc.cube_of(v) == cube_by_expansion(ring, v));
    }
}

TEST_CASE("ideal comparison")
{
    CHECK(same_ideal(rsp({"rho^2", "sigma^2"}), rsp({"rho^2 + sigma^2", "sigma^2"})));
    CHECK_FALSE(same_ideal(rsp({"rho^2"}), rsp({"sigma^2"})));
    const auto swapped = rsp({"rho^2", "rho*psi + sigma^2"}).relabel({0, 2, 1});
    CHECK(same_ideal(swapped, rsp({"rho^2", "rho*sigma + psi^2"})));
}

TEST_CASE("degree-two generators")
{
    const auto ring = GradedRingF2::parse({{"U", 1}, {"V", 1}, {"Xi", 2}, {"Omega", 2}},
                                          {"U^2", "U*V", "V^2", "U*Xi + V*Omega", "U*Omega", "V*Xi"});
    const auto sc = normalize(ring);
    CHECK(sc.dims == std::array<int, 4>{1, 2, 2, 1});
    CHECK(pd_check(sc));
}

TEST_CASE("symmetric index lists")
{
    CHECK(symmetric_pairs(3).size() == 6);
    CHECK(symmetric_triples(3).size() == 10);
    CHECK(symmetric_pairs(2) == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
    const auto sc = normalize(rsp({"rho^2", "sigma^2", "psi^2"}));
    CHECK(square_kernel(sc).dim() == 3);
    CHECK(format_pair_vector(0b000011, {"rho", "sigma", "psi"}) == "rho^2 + rho*sigma");
}
