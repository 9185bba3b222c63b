#include "brauerkit/elliptic.hpp"

#include <map>
#include <mutex>

namespace brauerkit {

WeierstrassModel WeierstrassModel::make(RingPtr ring, size_t t_index, MultiPoly a1, MultiPoly a2,
                                        MultiPoly a3, MultiPoly a4, MultiPoly a6) {
    if (ring->is_scalar_kind()) throw PreconditionError("WeierstrassModel: need a Poly ring");
    if (t_index >= ring->var_count()) throw PreconditionError("WeierstrassModel: bad t index");
    for (const MultiPoly* p : {&a1, &a2, &a3, &a4, &a6})
        require_same_ring(p->ring(), ring, "WeierstrassModel");
    return WeierstrassModel{std::move(ring), t_index, std::move(a1), std::move(a2), std::move(a3),
                            std::move(a4), std::move(a6)};
}

const MultiPoly& WeierstrassModel::a(int i) const {
    switch (i) {
        case 1: return a1;
        case 2: return a2;
        case 3: return a3;
        case 4: return a4;
        case 6: return a6;
    }
    throw PreconditionError("WeierstrassModel::a: index must be 1,2,3,4,6");
}

Discriminant discriminant(const WeierstrassModel& W) {
    const auto& A1 = W.a1;
    const auto& A2 = W.a2;
    const auto& A3 = W.a3;
    const auto& A4 = W.a4;
    const auto& A6 = W.a6;
    auto C = [&](long c) { return MultiPoly::constant(W.ring, c); };
    MultiPoly b2 = A1 * A1 + C(4) * A2;
    MultiPoly b4 = C(2) * A4 + A1 * A3;
    MultiPoly b6 = A3 * A3 + C(4) * A6;
    MultiPoly b8 = A1 * A1 * A6 + C(4) * A2 * A6 - A1 * A3 * A4 + A2 * (A3 * A3) - A4 * A4;
    MultiPoly delta = -(b2 * b2 * b8) - C(8) * (b4 * b4 * b4) - C(27) * (b6 * b6) +
                      C(9) * (b2 * b4 * b6);
    int vt = delta.is_zero() ? -1 : delta.valuation_in(W.t_index);
    return Discriminant{std::move(delta), vt};
}

K3ShapeReport validate_k3(const WeierstrassModel& W) {
    K3ShapeReport r;
    r.degree_bounds_ok = true;
    r.excess_degree = false;
    for (int i : {1, 2, 3, 4, 6}) {
        const MultiPoly& ai = W.a(i);
        if (ai.is_zero()) continue;
        int d = ai.degree_in(W.t_index);
        if (d > 2 * i) r.degree_bounds_ok = false;
        if (d > i) r.excess_degree = true;
        if (ai.valuation_in(W.t_index) < 0) r.degree_bounds_ok = false;
    }
    r.is_k3_shape = r.degree_bounds_ok && r.excess_degree;
    Discriminant D = discriminant(W);
    r.vt_delta = D.t_adic_valuation;
    r.is_minimal_hint = D.t_adic_valuation >= 0 && D.t_adic_valuation < 12;
    return r;
}

// w(z) for y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 in z = x/y, w = 1/y:
// w = z^3 - a1 z w + a2 z^2 w - a3 w^2 + a4 z w^2 + a6 w^3
static TruncSeries w_expansion(const RingPtr& R, const MultiPoly& a1, const MultiPoly& a2,
                               const MultiPoly& a3, const MultiPoly& a4, const MultiPoly& a6,
                               int order) {
    auto elem = [&](const MultiPoly& p) { return RingElement(p); };
    TruncSeries z3 = TruncSeries::monomial(R, {"z"}, order, "z", 3, RingElement::one(R));
    TruncSeries zmon = TruncSeries::monomial(R, {"z"}, order, "z", 1, RingElement::one(R));
    TruncSeries z2mon = TruncSeries::monomial(R, {"z"}, order, "z", 2, RingElement::one(R));
    TruncSeries w = z3;
    // each pass gains at least one order of accuracy; the defect valuation
    // strictly increases
    for (int pass = 0; pass <= order; ++pass) {
        TruncSeries w2 = series_mul(w, w);
        TruncSeries w3 = series_mul(w2, w);
        TruncSeries next = z3 - series_mul(zmon, w).scaled(elem(a1)) +
                           series_mul(z2mon, w).scaled(elem(a2)) - w2.scaled(elem(a3)) +
                           series_mul(zmon, w2).scaled(elem(a4)) + w3.scaled(elem(a6));
        if (next == w) break;
        w = std::move(next);
    }
    return w;
}

TruncSeries elliptic_law_series(const RingPtr& R, const MultiPoly& a1, const MultiPoly& a2,
                                const MultiPoly& a3, const MultiPoly& a4, const MultiPoly& a6,
                                int N) {
    for (const MultiPoly* p : {&a1, &a2, &a3, &a4, &a6})
        require_same_ring(p->ring(), R, "elliptic_law_series");
    auto elem = [&](const MultiPoly& p) { return RingElement(p); };
    const std::vector<std::string> xy = {"x", "y"};
    TruncSeries w = w_expansion(R, a1, a2, a3, a4, a6, N + 3);

    // lambda = (w(z2)-w(z1))/(z2-z1) as the exact divided difference
    TruncSeries lam = TruncSeries::zero(R, xy, N);
    for (const auto& [e, c] : w.terms()) {
        int k = e[0];
        for (int i = 0; i < k; ++i) {
            int j = k - 1 - i;
            if (i + j >= N) continue;
            ExpVec key(2);
            key.set(0, i);
            key.set(1, j);
            RingElement cur = lam.coefficient(key) + c;
            lam.set_coefficient(key, cur);
        }
    }
    // nu = w(z1) - lambda * z1
    TruncSeries xmon = TruncSeries::monomial(R, xy, N, "x", 1, RingElement::one(R));
    TruncSeries ymon = TruncSeries::monomial(R, xy, N, "y", 1, RingElement::one(R));
    TruncSeries wx = TruncSeries::zero(R, xy, N);
    for (const auto& [e, c] : w.terms()) {
        if (e[0] >= N) continue;
        ExpVec key(2);
        key.set(0, e[0]);
        wx.set_coefficient(key, c);
    }
    TruncSeries nu = wx - series_mul(lam, xmon);

    TruncSeries lam2 = series_mul(lam, lam);
    TruncSeries lam3 = series_mul(lam2, lam);
    TruncSeries lamnu = series_mul(lam, nu);
    TruncSeries lam2nu = series_mul(lam2, nu);

    auto scaled_const = [&](const MultiPoly& p, long k) {
        return RingElement(p) * RingElement::from_int(R, Int(k));
    };
    // third-root coefficient ratio of the substituted cubic
    TruncSeries C2 = lam.scaled(-elem(a1)) + nu.scaled(elem(a2)) + lam2.scaled(-elem(a3)) +
                     lamnu.scaled(scaled_const(a4, 2)) + lam2nu.scaled(scaled_const(a6, 3));
    TruncSeries C3tail = lam.scaled(elem(a2)) + lam2.scaled(elem(a4)) + lam3.scaled(elem(a6));
    TruncSeries one = TruncSeries::zero(R, xy, N);
    one.set_coefficient(ExpVec(2), RingElement::one(R));
    TruncSeries z3 = -xmon - ymon - series_mul(C2, series_invert_unit(one + C3tail));

    // formal inverse i(z) = -z / (1 + a1 z + a3 w(z))
    TruncSeries den = TruncSeries::zero(R, {"z"}, N);
    den.set_coefficient(ExpVec(1), RingElement::one(R));
    ExpVec e1(1);
    e1.set(0, 1);
    den.set_coefficient(e1, elem(a1));
    for (const auto& [e, c] : w.terms()) {
        if (e[0] >= N) continue;
        RingElement cur = den.coefficient(e[0]) + RingElement(a3) * c;
        ExpVec key(1);
        key.set(0, e[0]);
        den.set_coefficient(key, cur);
    }
    TruncSeries zmon1 = TruncSeries::monomial(R, {"z"}, N, "z", 1, RingElement::one(R));
    TruncSeries ineg = -series_mul(zmon1, series_invert_unit(den));

    return series_substitute(ineg, {z3});
}

const FormalGroupLaw& universal_elliptic_fgl(int order) {
    if (order < 2 || order > 18)
        throw PreconditionError("universal_elliptic_fgl: order out of range (2..18)");
    static std::mutex mu;
    static std::map<int, FormalGroupLaw> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    RingPtr R = Ring::poly(Ring::integers(), {"a1", "a2", "a3", "a4", "a6"});
    auto var = [&](size_t i) { return MultiPoly::variable(R, i); };
    TruncSeries G =
        elliptic_law_series(R, var(0), var(1), var(2), var(3), var(4), order);
    auto [pos, _] = cache.emplace(order, FormalGroupLaw::validate(std::move(G)));
    return pos->second;
}

FormalGroupLaw specialize(const WeierstrassModel& W, int order) {
    TruncSeries G = elliptic_law_series(W.ring, W.a1, W.a2, W.a3, W.a4, W.a6, order);
    return FormalGroupLaw::validate(std::move(G));
}

}  // namespace brauerkit
