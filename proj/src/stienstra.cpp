#include "brauerkit/stienstra.hpp"

#include <functional>

namespace brauerkit {

namespace {

// degree in the first num_x variables only
int x_degree(const Term& t, size_t num_x) {
    int d = 0;
    for (size_t i = 0; i < num_x; ++i) d += t.exps[i];
    return d;
}

int homogeneous_x_degree(const MultiPoly& f, size_t num_x, const char* what) {
    if (f.is_zero()) throw PreconditionError(std::string(what) + ": zero polynomial");
    int d = x_degree(f.terms()[0], num_x);
    for (const auto& t : f.terms())
        if (x_degree(t, num_x) != d)
            throw PreconditionError(std::string(what) + ": not homogeneous in the x-variables");
    return d;
}

void check_base_is_integers(const RingPtr& ring, const char* what) {
    if (ring->kind() != RingKind::Poly || ring->base()->kind() != RingKind::Integers)
        throw PreconditionError(std::string(what) +
                                ": expected a ZZ-flat base (polynomials over ZZ)");
}

// incremental pruned power expansion; betas[m] for m = 1..M.
// step(P) multiplies P by the step polynomial with x-caps M-1; target(k) is
// the exponent every x-variable must reach for the m = k+1 extraction.
std::vector<RingElement> beta_scan(const MultiPoly& step_poly, size_t num_x, int M,
                                   const RingPtr& param_ring,
                                   const std::function<int(int)>& power_of_m) {
    const RingPtr& R = step_poly.ring();
    std::vector<int> caps(R->var_count(), -1);
    for (size_t i = 0; i < num_x; ++i) caps[i] = M - 1;
    std::vector<size_t> x_vars(num_x);
    for (size_t i = 0; i < num_x; ++i) x_vars[i] = i;

    std::vector<RingElement> betas(static_cast<size_t>(M) + 1, RingElement::zero(param_ring));
    betas[1] = RingElement::one(param_ring);
    MultiPoly P = MultiPoly::constant(R, 1);
    int cur_power = 0;
    for (int m = 2; m <= M; ++m) {
        int need = power_of_m(m);
        if (need < 0) continue;  // beta_m = 0 identically (even m of a double plane)
        while (cur_power < need) {
            P = mul_capped(P, step_poly, caps);
            ++cur_power;
        }
        std::vector<int> target(num_x, m - 1);
        if (param_ring->is_scalar_kind()) {
            ExpVec e(R->var_count());
            for (size_t i = 0; i < num_x; ++i) e.set(i, m - 1);
            betas[static_cast<size_t>(m)] = RingElement(param_ring, P.coefficient_of(e));
        } else {
            betas[static_cast<size_t>(m)] =
                RingElement(P.coefficient_poly(x_vars, target, param_ring));
        }
    }
    return betas;
}

TruncSeries log_from_betas(const std::vector<RingElement>& betas, int M, const RingPtr& qring) {
    TruncSeries L = TruncSeries::zero(qring, {"t"}, M + 1);
    for (int m = 1; m <= M; ++m) {
        const RingElement& b = betas[static_cast<size_t>(m)];
        if (b.is_zero()) continue;
        RingElement c = b.map_to(qring).divided_by_int(static_cast<unsigned long>(m));
        ExpVec e(1);
        e.set(0, m);
        L.set_coefficient(e, std::move(c));
    }
    return L;
}

}  // namespace

RingPtr beta_ring(const std::vector<std::string>& params) {
    if (params.empty()) return Ring::integers();
    return Ring::poly(Ring::integers(), params);
}

RingPtr beta_ring_rational(const std::vector<std::string>& params) {
    if (params.empty()) return Ring::rationals();
    return Ring::poly(Ring::rationals(), params);
}

CompleteIntersectionK3 CompleteIntersectionK3::make(RingPtr ring, int n,
                                                    std::vector<MultiPoly> polys,
                                                    std::vector<std::string> params) {
    if (n < 3 || n > 5)
        throw PreconditionError("CompleteIntersectionK3: n must be 3, 4 or 5");
    check_base_is_integers(ring, "CompleteIntersectionK3");
    size_t num_x = static_cast<size_t>(n) + 1;
    if (ring->var_count() != num_x + params.size())
        throw PreconditionError("CompleteIntersectionK3: ring must carry x0..xn then params");
    if (polys.size() != static_cast<size_t>(n) - 2)
        throw PreconditionError("CompleteIntersectionK3: need n-2 defining polynomials");
    int degsum = 0;
    for (const auto& f : polys) {
        require_same_ring(f.ring(), ring, "CompleteIntersectionK3");
        degsum += homogeneous_x_degree(f, num_x, "CompleteIntersectionK3");
    }
    if (degsum != n + 1)
        throw PreconditionError("CompleteIntersectionK3: sum of degrees must be n+1, got " +
                                std::to_string(degsum));
    return CompleteIntersectionK3{std::move(ring), n, num_x, std::move(polys), std::move(params)};
}

DoublePlaneK3 DoublePlaneK3::make(RingPtr ring, MultiPoly sextic, std::vector<std::string> params) {
    check_base_is_integers(ring, "DoublePlaneK3");
    if (ring->var_count() != 3 + params.size())
        throw PreconditionError("DoublePlaneK3: ring must carry x0,x1,x2 then params");
    require_same_ring(sextic.ring(), ring, "DoublePlaneK3");
    if (homogeneous_x_degree(sextic, 3, "DoublePlaneK3") != 6)
        throw PreconditionError("DoublePlaneK3: branch curve must have degree exactly 6");
    return DoublePlaneK3{std::move(ring), std::move(sextic), std::move(params)};
}

std::vector<RingElement> ci_betas(const CompleteIntersectionK3& X, int M) {
    if (M < 1) throw PreconditionError("ci_betas: M >= 1");
    MultiPoly F = X.polys[0];
    for (size_t i = 1; i < X.polys.size(); ++i) F = F * X.polys[i];
    return beta_scan(F, X.num_x, M, beta_ring(X.params), [](int m) { return m - 1; });
}

std::vector<RingElement> dp_betas(const DoublePlaneK3& X, int M) {
    if (M < 1) throw PreconditionError("dp_betas: M >= 1");
    return beta_scan(X.sextic, 3, M, beta_ring(X.params),
                     [](int m) { return m % 2 == 0 ? -1 : (m - 1) / 2; });
}

TruncSeries ci_log(const CompleteIntersectionK3& X, int M) {
    return log_from_betas(ci_betas(X, M), M, beta_ring_rational(X.params));
}

TruncSeries dp_log(const DoublePlaneK3& X, int M) {
    return log_from_betas(dp_betas(X, M), M, beta_ring_rational(X.params));
}

std::vector<RingElement> family_log_ci(const CompleteIntersectionK3& X, int M) {
    return ci_betas(X, M);
}

std::vector<RingElement> family_log_dp(const DoublePlaneK3& X, int M) {
    return dp_betas(X, M);
}

FormalGroupLaw brauer_fgl_from_log(const TruncSeries& log, unsigned long p, int precision) {
    FormalGroupLaw G = fgl_from_log(log);
    // the theorem guarantees a law over K; a non-integral coefficient is a bug
    for (const auto& [e, c] : G.series().terms()) {
        (void)e;
        auto check_scalar = [](const Scalar& s) {
            if (auto* q = std::get_if<Rat>(&s)) {
                if (q->get_den() != 1)
                    throw Error("brauer_fgl: non-integral law coefficient " + q->get_str() +
                                " (beta list is inconsistent)");
            }
        };
        if (c.is_scalar())
            check_scalar(c.scalar());
        else
            for (const auto& t : c.poly().terms()) check_scalar(t.coeff);
    }
    if (p == 0) return G;
    Int pk(1);
    for (int i = 0; i < precision; ++i) pk *= static_cast<long>(p);
    RingPtr target_base = precision == 1 ? Ring::prime_field(p) : Ring::integers_mod(pk);
    const RingPtr& src = G.coeff_ring();
    RingPtr target = src->is_scalar_kind() ? target_base : Ring::poly(target_base, src->vars());
    return base_change(G, target);
}

FormalGroupLaw brauer_fgl(const CompleteIntersectionK3& X, unsigned long p, int precision, int N) {
    return brauer_fgl_from_log(ci_log(X, N - 1), p, precision);
}

FormalGroupLaw brauer_fgl(const DoublePlaneK3& X, unsigned long p, int precision, int N) {
    return brauer_fgl_from_log(dp_log(X, N - 1), p, precision);
}

}  // namespace brauerkit
