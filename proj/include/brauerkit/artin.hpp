#pragma once

#include "brauerkit/elliptic.hpp"

namespace brauerkit {

struct ArtinResult {
    FormalGroupLaw law;  // coefficients free of the fibration parameter t
    int iterations;
};

// Coboundary-elimination loop: from F = x/t +_E y/t, repeatedly remove the
// monomials of t-degree != -1 by formally adding the negatives of the
// high/low parts, until F is homogeneous of t-degree -1; returns t*F,
// re-validated with full associativity.
//
// ell must come from specialize() over a prime field base with a Laurent
// fibration variable; max_iter < 0 selects the default bound 2N.
ArtinResult artin_reduce(const FormalGroupLaw& ell, size_t t_index, int max_iter = -1);

// specialize + artin_reduce, with the K3-shape precondition enforced
ArtinResult artin_family(const WeierstrassModel& W, int order, int max_iter = -1);

// Corrected characteristic-2 height bounds from the a_{i,j} of a minimal
// Weierstrass equation normalized so that a2(t) = 0 and a_{1,2} = 1.
enum class Char2Height { H1, AtLeast2, AtLeast3, AtLeast4 };

// keys are (i,j) with i in {1,3,4,6} and 0 <= j <= 2i; missing entries are 0;
// any entry for i=2 must be zero and a_{1,2} must be 1
Char2Height char2_height_predicate(const std::map<std::pair<int, int>, int>& aij);

std::string to_string(Char2Height h);

}  // namespace brauerkit
