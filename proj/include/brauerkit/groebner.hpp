#pragma once

#include "brauerkit/algebra.hpp"

namespace brauerkit {

// Ideal in a Poly ring over a PrimeField (<= 4 variables), with an optional
// cached reduced Groebner basis under grevlex.
struct Ideal {
    RingPtr ring;
    std::vector<MultiPoly> gens;
    std::optional<std::vector<MultiPoly>> groebner;
};

Ideal make_ideal(RingPtr ring, std::vector<MultiPoly> gens);

// Reduced Groebner basis (lead coefficients 1, fully autoreduced); canonical
// for the order, so independent of generator permutation.
Ideal buchberger(const Ideal& I);

// Multivariate division remainder against `basis` under `order`. Works
// termwise, so it accepts polynomials tagged with a quotient ring as well.
MultiPoly poly_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                           const MonomialOrder& order);

bool in_ideal(const MultiPoly& p, const Ideal& I_with_basis);

// (I : v) via the tag-variable intersection construction:
// I cap (v) = (u*I + (1-u)*(v)) cap k[x], then exact division by v.
Ideal ideal_quotient(const Ideal& I, const MultiPoly& v);

// true iff the ideal quotient (I : v) strictly contains I
bool is_zero_divisor(const MultiPoly& v, const Ideal& I);

// true iff the reduced Groebner basis is {1}
bool is_unit_ideal(const Ideal& I);

// standard monomials of R/I (monomials not divisible by any basis lead);
// throws if infinite (ideal not zero-dimensional)
std::vector<ExpVec> standard_monomials(const Ideal& I_with_basis, size_t limit = 4096);

// certified test that the quotient by I is local with maximal ideal (all
// variables): I is zero-dimensional and every variable is nilpotent mod I
bool is_local_at_origin(const Ideal& I);

}  // namespace brauerkit
