#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldp {

using Int = std::int64_t;

/// Bad caller input: non-primitive weights, non-positive entries, invalid degree.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was called on data that does not meet its precondition
/// (e.g. topology of a hypersurface that is not quasi-smooth).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A computed quantity broke an identity that must always hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Weights are capped so every product formed by the predicates fits in Int.
inline constexpr Int kMaxWeight = Int{1} << 20;

/// Four ascending, jointly coprime positive weights of P(w0,w1,w2,w3).
class WeightSystem {
public:
    /// Sorts `raw`; throws InvalidInput for entries < 1, entries above
    /// kMaxWeight, or gcd(w0..w3) > 1.
    static WeightSystem normalize(std::array<Int, 4> raw);

    Int operator[](std::size_t i) const { return w_[i]; }
    const std::array<Int, 4>& values() const { return w_; }
    std::span<const Int, 4> span() const { return w_; }
    Int sum() const { return w_[0] + w_[1] + w_[2] + w_[3]; }

    auto operator<=>(const WeightSystem&) const = default;

    std::string to_string() const;

private:
    explicit WeightSystem(std::array<Int, 4> w) : w_(w) {}
    std::array<Int, 4> w_;
};

std::ostream& operator<<(std::ostream& os, const WeightSystem& w);

inline WeightSystem normalize_weights(std::array<Int, 4> raw) { return WeightSystem::normalize(raw); }

/// Exponents a0..a3 of z0^a0 z1^a1 z2^a2 z3^a3.
using ExponentVector = std::array<Int, 4>;

Int weighted_degree(const WeightSystem& w, const ExponentVector& a);

/// Every triple of weights is coprime.
bool is_well_formed(const WeightSystem& w);

/// All exponent vectors of weighted degree d, ordered lexicographically with
/// a3 outermost (then a2, a1, a0).
std::vector<ExponentVector> monomials_of_degree(const WeightSystem& w, Int d);

/// Same count as monomials_of_degree(w, d).size() without materializing.
Int count_monomials(const WeightSystem& w, Int d);

/// True iff d = sum of a_i * weights[i] for some non-negative a_i.
/// An empty weight list represents only d = 0.
bool representable(Int d, std::span<const Int> weights);

inline Int fano_index(const WeightSystem& w, Int d) { return w.sum() - d; }

/// A hypersurface family Z_d in P(w) with index I = |w| - d >= 1 and d > w3.
class Candidate {
public:
    static Candidate make(const WeightSystem& w, Int d);
    /// Builds from the index instead of the degree.
    static Candidate with_index(const WeightSystem& w, Int index);

    const WeightSystem& weights() const { return w_; }
    Int degree() const { return d_; }
    Int index() const { return index_; }

    // Canonical order: index, then weights, then degree.
    auto operator<=>(const Candidate&) const = default;

private:
    Candidate(WeightSystem w, Int d, Int index) : index_(index), w_(w), d_(d) {}
    Int index_;
    WeightSystem w_;
    Int d_;
};

std::ostream& operator<<(std::ostream& os, const Candidate& c);

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);

}  // namespace ldp
