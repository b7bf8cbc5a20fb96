#pragma once

#include "ldp/core.hpp"

#include <optional>

namespace ldp {

/// For each variable i, the monomial z_i^{m[i]} z_{j[i]} of degree d with the
/// smallest m[i] (ties broken by the smallest j[i]).
struct ConditionIWitness {
    std::array<Int, 4> m{};
    std::array<int, 4> j{};

    bool operator==(const ConditionIWitness&) const = default;
};

/// How the two-extra-variable clause of the pair condition reads.
enum class PairRule {
    /// Accept when one monomial z_i^c z_j^e z_k with k outside {i,j} exists
    /// (the second monomial may reuse the same k).
    kLiteral,
    /// Require two such monomials with distinct extra variables k != l.
    kDistinctExtra,
};

std::optional<ConditionIWitness> condition_I(const WeightSystem& w, Int d);

/// Each non-coprime pair (w_i, w_j) supports a monomial z_i^a z_j^b of degree d.
bool condition_II(const WeightSystem& w, Int d);

bool condition_III(const WeightSystem& w, Int d, PairRule rule = PairRule::kLiteral);

/// z_i^a z_j^b (a, b >= 0) has degree d for some a, b.
bool has_pair_monomial(const WeightSystem& w, Int d, std::size_t i, std::size_t j);

/// Quasi-smoothness of the general degree-d member of P(w).
bool is_quasismooth(const WeightSystem& w, Int d, PairRule rule = PairRule::kLiteral);

}  // namespace ldp
