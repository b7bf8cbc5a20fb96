#include "ldp/core.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace ldp {

Int gcd(Int a, Int b) { return std::gcd(a, b); }
Int lcm(Int a, Int b) { return std::lcm(a, b); }

WeightSystem WeightSystem::normalize(std::array<Int, 4> raw)
{
    for (Int x : raw) {
        if (x < 1)
            throw InvalidInput("weights must be positive integers");
        if (x > kMaxWeight)
            throw InvalidInput("weight exceeds supported bound");
    }
    std::sort(raw.begin(), raw.end());
    Int g = 0;
    for (Int x : raw)
        g = std::gcd(g, x);
    if (g != 1)
        throw InvalidInput("non-primitive weight system: gcd of all weights is " + std::to_string(g));
    return WeightSystem(raw);
}

std::string WeightSystem::to_string() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const WeightSystem& w)
{
    return os << '(' << w[0] << ',' << w[1] << ',' << w[2] << ',' << w[3] << ')';
}

Int weighted_degree(const WeightSystem& w, const ExponentVector& a)
{
    Int d = 0;
    for (std::size_t i = 0; i < 4; ++i)
        d += a[i] * w[i];
    return d;
}

bool is_well_formed(const WeightSystem& w)
{
    for (std::size_t skip = 0; skip < 4; ++skip) {
        Int g = 0;
        for (std::size_t i = 0; i < 4; ++i)
            if (i != skip)
                g = std::gcd(g, w[i]);
        if (g != 1)
            return false;
    }
    return true;
}

bool representable(Int d, std::span<const Int> weights)
{
    if (d < 0)
        return false;
    if (d == 0)
        return true;
    if (weights.empty())
        return false;
    if (weights.size() == 1)
        return d % weights[0] == 0;
    const Int w = weights.back();
    const auto rest = weights.first(weights.size() - 1);
    for (Int r = d; r >= 0; r -= w)
        if (representable(r, rest))
            return true;
    return false;
}

std::vector<ExponentVector> monomials_of_degree(const WeightSystem& w, Int d)
{
    std::vector<ExponentVector> out;
    if (d < 0)
        return out;
    for (Int a3 = 0; a3 * w[3] <= d; ++a3) {
        const Int r3 = d - a3 * w[3];
        for (Int a2 = 0; a2 * w[2] <= r3; ++a2) {
            const Int r2 = r3 - a2 * w[2];
            for (Int a1 = 0; a1 * w[1] <= r2; ++a1) {
                const Int r1 = r2 - a1 * w[1];
                if (r1 % w[0] == 0)
                    out.push_back({r1 / w[0], a1, a2, a3});
            }
        }
    }
    return out;
}

Int count_monomials(const WeightSystem& w, Int d)
{
    if (d < 0)
        return 0;
    Int n = 0;
    for (Int r3 = d; r3 >= 0; r3 -= w[3])
        for (Int r2 = r3; r2 >= 0; r2 -= w[2])
            for (Int r1 = r2; r1 >= 0; r1 -= w[1])
                n += (r1 % w[0] == 0);
    return n;
}

Candidate Candidate::make(const WeightSystem& w, Int d)
{
    if (d < 1)
        throw InvalidInput("degree must be positive");
    const Int index = w.sum() - d;
    if (index < 1)
        throw InvalidInput("not a log del Pezzo candidate: index |w| - d = " + std::to_string(index) + " < 1");
    if (d <= w[3])
        throw InvalidInput("degree " + std::to_string(d) + " does not exceed the largest weight (linear cone excluded)");
    return Candidate(w, d, index);
}

Candidate Candidate::with_index(const WeightSystem& w, Int index)
{
    return make(w, w.sum() - index);
}

std::ostream& operator<<(std::ostream& os, const Candidate& c)
{
    return os << c.weights() << " d=" << c.degree() << " I=" << c.index();
}

}  // namespace ldp
