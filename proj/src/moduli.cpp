#include "ldp/moduli.hpp"

#include "ldp/quasismooth.hpp"

namespace ldp {

Int monomial_dimension(const Candidate& c)
{
    if (!is_quasismooth(c.weights(), c.degree()))
        throw PreconditionError("monomial_dimension: general member of degree " + std::to_string(c.degree()) +
                                " in P" + c.weights().to_string() + " is not quasi-smooth");
    return count_monomials(c.weights(), c.degree());
}

Int aut_dimension(const WeightSystem& w)
{
    Int dim = 0;
    for (Int wi : w.values())
        dim += count_monomials(w, wi);
    return dim;
}

ModuliReport moduli_report(const Candidate& c)
{
    ModuliReport r;
    r.m = monomial_dimension(c);
    r.dim_g = aut_dimension(c.weights());
    r.n = r.m - r.dim_g;
    if (r.n < 0)
        throw InvariantViolation("negative moduli dimension " + std::to_string(r.n) + " for " + c.weights().to_string() +
                                 " in degree " + std::to_string(c.degree()));
    return r;
}

Int moduli_dimension(const Candidate& c)
{
    return moduli_report(c).n;
}

bool is_minimal_torus(const WeightSystem& w)
{
    for (std::size_t i = 1; i < 4; ++i)
        if (representable(w[i], w.span().first(i)))
            return false;
    return true;
}

}  // namespace ldp
