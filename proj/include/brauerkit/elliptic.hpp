#pragma once

#include "brauerkit/fgl.hpp"

namespace brauerkit {

// Weierstrass model y^2 + a1(t)xy + a3(t)y = x^3 + a2(t)x^2 + a4(t)x + a6(t)
// with coefficients in a Poly ring whose variable `t_index` is the fibration
// parameter (typically k[t] or k[t,a,b], Laurent-enabled on t for the Artin
// pipeline downstream).
struct WeierstrassModel {
    RingPtr ring;
    size_t t_index = 0;
    MultiPoly a1, a2, a3, a4, a6;

    static WeierstrassModel make(RingPtr ring, size_t t_index, MultiPoly a1, MultiPoly a2,
                                 MultiPoly a3, MultiPoly a4, MultiPoly a6);
    const MultiPoly& a(int i) const;
};

struct K3ShapeReport {
    bool is_k3_shape = false;       // deg a_i <= 2i for all i AND deg a_i > i for some i
    bool degree_bounds_ok = false;  // deg a_i <= 2i for all i
    bool excess_degree = false;     // deg a_i > i for some i
    bool is_minimal_hint = false;   // v_t(Delta) < 12
    int vt_delta = -1;              // -1 if Delta = 0
};

struct Discriminant {
    MultiPoly delta;
    int t_adic_valuation;  // -1 if delta = 0
};

// both degree conditions evaluated; never throws
K3ShapeReport validate_k3(const WeierstrassModel& W);

// standard b-invariant discriminant
Discriminant discriminant(const WeierstrassModel& W);

// the formal group law of the curve in the parameter z = x/y, computed by the
// w(z) fixed-point expansion and the chord through (z1,w(z1)), (z2,w(z2));
// exact divided differences only (no division by 2 or 3)
TruncSeries elliptic_law_series(const RingPtr& ring, const MultiPoly& a1, const MultiPoly& a2,
                                const MultiPoly& a3, const MultiPoly& a4, const MultiPoly& a6,
                                int order);

// the universal law over ZZ[a1,a2,a3,a4,a6]; computed once per order and
// cached (write-once). Scale guard: order <= 18.
const FormalGroupLaw& universal_elliptic_fgl(int order);

// the universal law with a_i -> a_i(t): computed directly in W's ring
FormalGroupLaw specialize(const WeierstrassModel& W, int order);

}  // namespace brauerkit
