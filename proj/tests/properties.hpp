#pragma once

// Randomized and parametric property checks; each returns the number of
// violations. Shared by the unit tests and the acceptance run.

#include "ldp/catalog.hpp"
#include "ldp/klt.hpp"
#include "ldp/moduli.hpp"
#include "ldp/topology.hpp"

#include <random>

namespace ldp::prop {

inline VirtualCharacter random_character(std::mt19937_64& rng)
{
    static constexpr Int kOrders[] = {1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30, 36, 45, 60};
    std::uniform_int_distribution<int> terms(1, 4), pick(0, std::size(kOrders) - 1), num(-6, 6), den(1, 4);
    VirtualCharacter v;
    for (int t = terms(rng); t > 0; --t)
        v += VirtualCharacter::lambda(kOrders[pick(rng)], Rational(num(rng), den(rng)));
    return v;
}

inline Int char_mul_laws(int trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Int bad = 0;
    for (int t = 0; t < trials; ++t) {
        const auto a = random_character(rng), b = random_character(rng), c = random_character(rng);
        bad += char_mul(a, b) != char_mul(b, a);
        bad += char_mul(char_mul(a, b), c) != char_mul(a, char_mul(b, c));
        bad += char_mul(a, b + c) != char_mul(a, b) + char_mul(a, c);
        bad += char_mul(VirtualCharacter::unit(), a) != a;
    }
    return bad;
}

// (4,2k+1,4k+2,6k+1), d = 12k+6: 2Id = 3 w0 w2 exactly whenever the written
// form is ascending, and the vertex rule is unavailable.
inline Int boundary_family_failures(Int k_max)
{
    Int bad = 0;
    for (Int k = 1; k <= k_max; ++k) {
        const Candidate c = Candidate::make(WeightSystem::normalize({4, 2 * k + 1, 4 * k + 2, 6 * k + 1}), 12 * k + 6);
        if (k >= 2 && 2 * c.index() * c.degree() != 3 * c.weights()[0] * c.weights()[2])
            ++bad;
        if (gate_check(c) || certify_ke(c).is_certified())
            ++bad;
    }
    return bad;
}

inline Int minimal_torus_failures(const Catalog& cat, int fuzz, std::uint64_t seed)
{
    Int bad = 0;
    auto check = [&](const WeightSystem& w) { bad += is_minimal_torus(w) != (aut_dimension(w) == 4); };
    for (const auto* rows : {&cat.table1, &cat.table2})
        for (const auto& r : *rows)
            check(WeightSystem::normalize(r.weights));
    for (const auto* fams : {&cat.series, &cat.unlisted})
        for (const auto& f : *fams)
            for (Int k = f.k_min; k < f.k_min + 5; ++k)
                check(WeightSystem::normalize(f.weights_at(k)));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Int> wdist(1, 120);
    for (int done = 0; done < fuzz;) {
        std::array<Int, 4> w{wdist(rng), wdist(rng), wdist(rng), wdist(rng)};
        Int g = 0;
        for (Int x : w)
            g = std::gcd(g, x);
        if (g != 1)
            continue;
        check(WeightSystem::normalize(w));
        ++done;
    }
    return bad;
}

// alpha = 5/7 at the point of order 6k+1 on (3,3k+1,6k+1,9k+3), d = 18k+6, I = 2.
inline Int local_bound_failures(Int k_max)
{
    Int bad = 0;
    for (Int k = 1; k <= k_max; ++k)
        bad += !klt_local_bound({Rational(5, 7), 6 * k + 1, 18 * k + 6, 2, {3, 6 * k + 1, 9 * k + 3}});
    return bad;
}

}  // namespace ldp::prop
