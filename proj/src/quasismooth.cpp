#include "ldp/quasismooth.hpp"

namespace ldp {

std::optional<ConditionIWitness> condition_I(const WeightSystem& w, Int d)
{
    if (d < 1)
        throw InvalidInput("degree must be positive");
    ConditionIWitness out;
    for (std::size_t i = 0; i < 4; ++i) {
        Int best_m = 0;
        int best_j = -1;
        for (int j = 0; j < 4; ++j) {
            const Int rest = d - w[static_cast<std::size_t>(j)];
            if (rest < w[i] || rest % w[i] != 0)
                continue;
            const Int m = rest / w[i];
            if (best_j < 0 || m < best_m) {
                best_m = m;
                best_j = j;
            }
        }
        if (best_j < 0)
            return std::nullopt;
        out.m[i] = best_m;
        out.j[i] = best_j;
    }
    return out;
}

bool has_pair_monomial(const WeightSystem& w, Int d, std::size_t i, std::size_t j)
{
    const std::array<Int, 2> pair{w[i], w[j]};
    return representable(d, pair);
}

bool condition_II(const WeightSystem& w, Int d)
{
    if (d < 1)
        throw InvalidInput("degree must be positive");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (gcd(w[i], w[j]) > 1 && !has_pair_monomial(w, d, i, j))
                return false;
    return true;
}

bool condition_III(const WeightSystem& w, Int d, PairRule rule)
{
    if (d < 1)
        throw InvalidInput("degree must be positive");
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (has_pair_monomial(w, d, i, j))
                continue;
            // z_i^c z_j^e z_k with k outside the pair
            int extras = 0;
            for (std::size_t k = 0; k < 4; ++k)
                if (k != i && k != j && has_pair_monomial(w, d - w[k], i, j))
                    ++extras;
            const int needed = rule == PairRule::kLiteral ? 1 : 2;
            if (extras < needed)
                return false;
        }
    }
    return true;
}

bool is_quasismooth(const WeightSystem& w, Int d, PairRule rule)
{
    return condition_I(w, d).has_value() && condition_II(w, d) && condition_III(w, d, rule);
}

}  // namespace ldp
