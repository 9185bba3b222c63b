#pragma once

#include "brauerkit/fgl.hpp"

namespace brauerkit {

// Complete intersection K3 in P^n cut out by n-2 homogeneous polynomials with
// sum of degrees n+1 (n in {3,4,5}); the ring carries x0..xn first, then any
// family parameters.
struct CompleteIntersectionK3 {
    RingPtr ring;
    int n = 3;
    size_t num_x = 4;
    std::vector<MultiPoly> polys;
    std::vector<std::string> params;

    static CompleteIntersectionK3 make(RingPtr ring, int n, std::vector<MultiPoly> polys,
                                       std::vector<std::string> params = {});
};

// Double cover of P^2 branched along a degree-6 plane curve f (w^2 = f)
struct DoublePlaneK3 {
    RingPtr ring;  // x0,x1,x2 first, then parameters
    MultiPoly sextic;
    std::vector<std::string> params;

    static DoublePlaneK3 make(RingPtr ring, MultiPoly sextic, std::vector<std::string> params = {});
};

// The parameter ring K of the raw logarithm coefficients: ZZ, or ZZ[params]
RingPtr beta_ring(const std::vector<std::string>& params);
// ... and its rational version QQ / QQ[params]
RingPtr beta_ring_rational(const std::vector<std::string>& params);

// beta_m = coefficient of (x0...xn)^(m-1) in (f1...f_{n-2})^(m-1), for
// m = 1..M, over K (no division). Intermediate expansion terms whose exponent
// in any x-variable exceeds M-1 can never reach a target monomial and are
// pruned.
std::vector<RingElement> ci_betas(const CompleteIntersectionK3& X, int M);

// the logarithm sum_m beta_m t^m / m over K tensor QQ, order M+1
TruncSeries ci_log(const CompleteIntersectionK3& X, int M);

// beta_m = 0 for even m, else coefficient of (x0x1x2)^(m-1) in f^((m-1)/2)
std::vector<RingElement> dp_betas(const DoublePlaneK3& X, int M);
TruncSeries dp_log(const DoublePlaneK3& X, int M);

// raw beta list for a family over ZZ[a,b]; identical computation, named for
// the parametric use that feeds the Landweber checks
std::vector<RingElement> family_log_ci(const CompleteIntersectionK3& X, int M);
std::vector<RingElement> family_log_dp(const DoublePlaneK3& X, int M);

// log -> exp -> law over the rationals; integrality of every coefficient is
// asserted, then the law is reduced to IntegersMod(p^precision) (PrimeField
// when precision = 1). p = 0 returns the rational law.
FormalGroupLaw brauer_fgl_from_log(const TruncSeries& log, unsigned long p, int precision);
FormalGroupLaw brauer_fgl(const CompleteIntersectionK3& X, unsigned long p, int precision, int N);
FormalGroupLaw brauer_fgl(const DoublePlaneK3& X, unsigned long p, int precision, int N);

}  // namespace brauerkit
