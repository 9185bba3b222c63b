#include "brauerkit/fgl.hpp"

#include <sstream>

namespace brauerkit {

namespace {

std::string key_to_string(const ExpVec& e, const std::vector<std::string>& vars) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << vars[i];
        if (e[i] != 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

// first key where the two series differ (they are assumed comparable)
std::string first_difference(const TruncSeries& a, const TruncSeries& b) {
    for (const auto& [e, c] : a.terms()) {
        if (!(b.coefficient(e) == c)) return key_to_string(e, a.vars());
    }
    for (const auto& [e, c] : b.terms()) {
        if (!(a.coefficient(e) == c)) return key_to_string(e, a.vars());
    }
    return "?";
}

TruncSeries var_series(const RingPtr& R, const std::vector<std::string>& vars, int order,
                       const std::string& v) {
    return TruncSeries::monomial(R, vars, order, v, 1, RingElement::one(R));
}

}  // namespace

bool FormalGroupLaw::is_additive() const {
    TruncSeries xy = var_series(coeff_ring(), series_.vars(), order(), series_.vars()[0]) +
                     var_series(coeff_ring(), series_.vars(), order(), series_.vars()[1]);
    return series_ == xy;
}

FormalGroupLaw FormalGroupLaw::validate(TruncSeries s) {
    if (s.var_count() != 2) throw PreconditionError("validate_fgl: series must be bivariate");
    if (s.order() < 2) throw PreconditionError("validate_fgl: order must be >= 2");
    const RingPtr& R = s.coeff_ring();
    const int N = s.order();
    const auto& vars = s.vars();
    // unitality
    TruncSeries gx0 = s.at_zero(1);
    TruncSeries x1 = var_series(R, {vars[0]}, N, vars[0]);
    if (gx0 != x1) throw ValidationError("unitality", first_difference(gx0, x1) );
    TruncSeries g0y = s.at_zero(0);
    TruncSeries y1 = var_series(R, {vars[1]}, N, vars[1]);
    if (g0y != y1) throw ValidationError("unitality", first_difference(g0y, y1));
    // commutativity
    TruncSeries swapped = s.with_vars(vars, {1, 0});
    if (swapped != s) throw ValidationError("commutativity", first_difference(s, swapped));
    // associativity in a genuine three-variable ring
    std::vector<std::string> v3 = {vars[0], vars[1], "@z"};
    TruncSeries A = s.embedded(v3, {0, 1});                       // G(x,y)
    TruncSeries B = s.embedded(v3, {1, 2});                       // G(y,z)
    TruncSeries Z = var_series(R, v3, N, "@z");
    TruncSeries X = var_series(R, v3, N, vars[0]);
    TruncSeries lhs = series_substitute(s, {A, Z});
    TruncSeries rhs = series_substitute(s, {X, B});
    if (lhs != rhs) throw ValidationError("associativity", first_difference(lhs, rhs));
    return FormalGroupLaw(std::move(s));
}

std::string HeightResult::to_string() const {
    switch (kind) {
        case Kind::Infinite: return "infinite";
        case Kind::IndeterminateAtOrder:
            return "indeterminate-at-order-" + std::to_string(order);
        case Kind::Finite:
            return "h=" + std::to_string(h) + " (unit " + leading_unit.to_string() + ")";
    }
    return "?";
}

TruncSeries logarithm(const FormalGroupLaw& G) {
    const RingPtr& R = G.coeff_ring();
    if (!R->contains_rationals())
        throw PreconditionError("logarithm: coefficient ring must contain the rationals");
    // dG/dy at y=0, a unit-constant series in x; invert and integrate termwise
    TruncSeries gy = G.series().derivative(1).at_zero(1);
    TruncSeries inv = series_invert_unit(gy);
    TruncSeries L = inv.antiderivative();
    return L.with_vars({"t"}, {0});
}

FormalGroupLaw fgl_from_log(const TruncSeries& L) {
    if (L.var_count() != 1) throw PreconditionError("fgl_from_log: log must be univariate");
    ExpVec z(1);
    if (!L.coefficient(z).is_zero() || !L.coefficient(1).is_one())
        throw PreconditionError("fgl_from_log: need L(0)=0 and L'(0)=1");
    TruncSeries expS = series_reversion(L);
    std::vector<std::string> xy = {"x", "y"};
    TruncSeries S = L.embedded(xy, {0}) + L.embedded(xy, {1});
    TruncSeries G = series_substitute(expS, {S});
    return FormalGroupLaw::validate(std::move(G));
}

TruncSeries p_series(const FormalGroupLaw& G, unsigned long p) {
    const RingPtr& R = G.coeff_ring();
    TruncSeries t = TruncSeries::monomial(R, {"t"}, G.order(), "t", 1, RingElement::one(R));
    TruncSeries acc = t;
    for (unsigned long k = 1; k < p; ++k) acc = series_substitute(G.series(), {acc, t});
    return acc;
}

TruncSeries p_typicalize_log(const TruncSeries& L, unsigned long p) {
    if (L.var_count() != 1) throw PreconditionError("p_typicalize_log: univariate only");
    TruncSeries r = TruncSeries::zero(L.coeff_ring(), L.vars(), L.order());
    for (const auto& [e, c] : L.terms()) {
        long long m = e[0];
        while (m % static_cast<long long>(p) == 0) m /= static_cast<long long>(p);
        if (m == 1) r.set_coefficient(e, c);
    }
    return r;
}

TruncSeries formal_inverse(const FormalGroupLaw& G) {
    const RingPtr& R = G.coeff_ring();
    const int N = G.order();
    TruncSeries t = TruncSeries::monomial(R, {"t"}, N, "t", 1, RingElement::one(R));
    TruncSeries s = -t;
    for (int n = 2; n < N; ++n) {
        TruncSeries comp = series_substitute(G.series(), {t, s});
        RingElement c = comp.coefficient(n);
        if (c.is_zero()) continue;
        ExpVec e(1);
        e.set(0, n);
        s.set_coefficient(e, -c);
    }
    return s;
}

HeightResult height_from_p_series(const TruncSeries& ps, unsigned long p,
                                  bool structurally_additive) {
    const int N = ps.order();
    if (ps.is_zero()) {
        if (structurally_additive) return {HeightResult::Kind::Infinite, -1, {}, N};
        return {HeightResult::Kind::IndeterminateAtOrder, -1, {}, N};
    }
    long long d = ps.terms().begin()->first[0];
    long long q = d;
    int h = 0;
    while (q % static_cast<long long>(p) == 0) {
        q /= static_cast<long long>(p);
        ++h;
    }
    if (q != 1)
        throw Error("height: first nonzero p-series term t^" + std::to_string(d) +
                    " is not a p-power (invalid law?)");
    RingElement u = ps.terms().begin()->second;
    if (!u.is_unit()) throw Error("height: leading p-series coefficient is not a unit");
    return {HeightResult::Kind::Finite, h, u, N};
}

HeightResult height_mod_p(const FormalGroupLaw& G, unsigned long p, int h_max) {
    Int phmax(1);
    for (int i = 0; i < h_max; ++i) phmax *= static_cast<long>(p);
    if (Int(G.order()) <= phmax)
        throw PreconditionError("height_mod_p: order " + std::to_string(G.order()) +
                                " insufficient for h_max " + std::to_string(h_max));
    // the structural-additivity certificate is read off the law as given,
    // before reduction: a characteristic-zero law that merely reduces to
    // x + y at this order stays indeterminate (truncation cannot prove
    // infinite height)
    bool structurally_additive = G.is_additive();
    FormalGroupLaw Gp = G.coeff_ring()->is_char_p(p)
                            ? G
                            : base_change(G, Ring::prime_field(p));
    TruncSeries ps = p_series(Gp, p);
    return height_from_p_series(ps, p, structurally_additive);
}

FormalGroupLaw base_change(const FormalGroupLaw& G, const RingPtr& target,
                           const std::map<std::string, RingElement>& assignment) {
    return FormalGroupLaw::validate(G.series().map_coefficients(target, assignment));
}

}  // namespace brauerkit
