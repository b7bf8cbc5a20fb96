#pragma once

#include "ldp/core.hpp"

namespace ldp {

struct ModuliReport {
    Int m = 0;      ///< dimension of the degree-d monomial space
    Int dim_g = 0;  ///< dimension of the graded automorphism group G(w)
    Int n = 0;      ///< moduli dimension m - dim_g

    bool operator==(const ModuliReport&) const = default;
};

/// Number of degree-d monomials; the quasi-smooth locus is dense in their span.
/// Throws PreconditionError if the general member is not quasi-smooth.
Int monomial_dimension(const Candidate& c);

/// Sum over i of the number of monomials of degree w_i.
Int aut_dimension(const WeightSystem& w);

/// monomial_dimension - aut_dimension; throws InvariantViolation if negative.
Int moduli_dimension(const Candidate& c);

ModuliReport moduli_report(const Candidate& c);

/// No weight is a non-negative combination (positive total) of the weights
/// preceding it in ascending order. Equal weights therefore fail, matching
/// the GL(2) block they contribute to G(w).
bool is_minimal_torus(const WeightSystem& w);

}  // namespace ldp
