#include "sol3/buindex.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "sol3/error.hpp"

namespace sol3 {

bool lifts_integrally(const SolGroupSpec& spec, f2::Vec generator_values)
{
    f2::Subspace reductions;
    for (const auto& v : integer_kernel(presentation(spec).abelianized())) {
        f2::Vec bits = 0;
        for (std::size_t g = 0; g < v.size(); ++g)
            if (floor_mod(v[g], 2) == 1)
                bits |= f2::Vec{1} << g;
        reductions.insert(bits);
    }
    return reductions.contains(generator_values);
}

int bu_generic(const SolGroupSpec& spec, const ClassifiedRing& classified, f2::Vec phi)
{
    if (phi == 0)
        throw Error(ErrorCode::ZeroClass, "the Borsuk-Ulam index needs a nonzero class");
    if (lifts_integrally(spec, classified.basis.evaluate(phi)))
        return 1;
    return (classified.sc.cube_of(phi) & 1U) ? 3 : 2;
}

namespace {

struct RuleValue {
    int rule = 0;
    int index = 0;
};

RuleValue mapping_torus_rule(const SolGroupSpec& spec, const ClassifiedRing& classified, f2::Vec phi)
{
    constexpr f2::Vec kRho = 0b001;  // t -> 1, x, y -> 0
    const f2::Vec values = classified.basis.evaluate(phi);
    if (values == kRho)
        return {1, 1};

    const Mat2Z m = spec.matrix();
    const Int eps = m.det();
    const Int tau = m.trace();
    const Int delta1 = 1 - tau + eps;
    const Int delta2 = gcd(gcd(m.a - 1, m.b), gcd(m.c, m.d - 1));
    auto mod4 = [](Int x) { return floor_mod(x, 4); };
    auto mod8 = [](Int x) { return floor_mod(x, 8); };
    const bool cube_zero = (classified.sc.cube_of(phi) & 1U) == 0;

    if (mod4(tau) == mod4(eps - 1))
        return {2, 3};
    if (mod4(tau) == mod4(eps + 1)) {
        const bool theta_id_mod4 = mod4(m.a) == 1 && mod4(m.d) == 1 && mod4(m.b) == 0 && mod4(m.c) == 0;
        if (delta2 % 2 != 0 || theta_id_mod4)
            return {3, 2};
    }
    if (eps == 1 && mod8(delta1) == 0 && mod4(delta2) == 2)
        return {4, square_test(spec, values) ? 2 : 3};
    if (eps == 1 && mod8(delta1) == 4) {
        const bool theta_minus_id_mod4 = mod4(m.a) == 3 && mod4(m.d) == 3 && mod4(m.b) == 0 && mod4(m.c) == 0;
        if (theta_minus_id_mod4)
            return {5, 2};
        // Split by cubes: no class other than rho has vanishing square here.
        return {6, cube_zero ? 2 : 3};
    }
    if (eps == -1 && mod4(tau) == 0 && mod4(delta2) == 2) {
        const Int bc8 = mod8(checked_mul(m.b, m.c));
        if (bc8 == 0)
            return {7, cube_zero ? 2 : 3};
        if (bc8 == 4)
            return {8, 3};
    }
    throw std::logic_error("no Borsuk-Ulam rule applies to " + spec.to_string());
}

RuleValue union_rule(const SolGroupSpec& spec, const ClassifiedRing& classified, f2::Vec phi)
{
    const Int b4 = floor_mod(spec.b, 4);
    if (b4 % 2 == 1)
        return {9, 2};
    if (b4 == 0)
        return {10, 2};
    // Classes through pi / sqrt(pi) are exactly those vanishing on y.
    constexpr f2::Vec kY = 0b100;
    const bool through_quotient = (classified.basis.evaluate(phi) & kY) == 0;
    return {11, through_quotient ? 2 : 3};
}

}  // namespace

BUTable bu_rules(const SolGroupSpec& spec, const ClassifiedRing& classified)
{
    BUTable table;
    table.family = spec.family;
    const f2::Vec limit = f2::Vec{1} << classified.basis.size();
    for (f2::Vec phi = 1; phi < limit; ++phi) {
        const RuleValue rv = spec.family == Family::MappingTorus ? mapping_torus_rule(spec, classified, phi)
                                                                  : union_rule(spec, classified, phi);
        BUEntry entry;
        entry.phi = phi;
        entry.name = classified.basis.name_of(phi);
        entry.index = rv.index;
        entry.rule_id = rv.rule;
        entry.generic_index = bu_generic(spec, classified, phi);
        if (entry.index != entry.generic_index) {
            std::ostringstream os;
            os << "BU mismatch on " << spec.to_string() << " (" << to_string(classified.label.id) << "), phi = "
               << entry.name << ": rule " << entry.rule_id << " gives " << entry.index << ", generic definition gives "
               << entry.generic_index;
            throw Error(ErrorCode::CrossCheckMismatch, os.str());
        }
        table.entries.push_back(entry);
    }
    return table;
}

bool BUTable::counting_invariants_hold() const
{
    std::map<int, std::map<int, int>> by_rule;  // rule -> index -> count
    int ones = 0;
    for (const BUEntry& e : entries) {
        ++by_rule[e.rule_id][e.index];
        ones += e.index == 1 ? 1 : 0;
    }
    if (ones != (family == Family::MappingTorus ? 1 : 0))
        return false;
    auto split_is = [&](int rule, int twos, int threes) {
        auto it = by_rule.find(rule);
        if (it == by_rule.end())
            return true;
        return it->second[2] == twos && it->second[3] == threes;
    };
    return split_is(4, 2, 4) && split_is(6, 2, 4) && split_is(7, 4, 2);
}

}  // namespace sol3
