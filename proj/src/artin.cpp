#include "brauerkit/artin.hpp"

namespace brauerkit {

namespace {

// split one coefficient polynomial into (t-degree > -1, t-degree < -1) parts
void split_bad(const MultiPoly& c, size_t t, MultiPoly& hi, MultiPoly& lo) {
    std::vector<Term> h, l;
    for (const auto& term : c.terms()) {
        if (term.exps[t] > -1) h.push_back(term);
        else if (term.exps[t] < -1) l.push_back(term);
    }
    hi = MultiPoly::from_terms(c.ring(), std::move(h));
    lo = MultiPoly::from_terms(c.ring(), std::move(l));
}

void check_laurent_bounds(const TruncSeries& F, size_t t, int bound) {
    for (const auto& [e, c] : F.terms()) {
        (void)e;
        const MultiPoly& p = c.poly();
        if (p.is_zero()) continue;
        if (p.degree_in(t) > bound || p.valuation_in(t) < -bound)
            throw Error("artin_reduce: t-exponent escaped [-" + std::to_string(bound) + ", " +
                        std::to_string(bound) + "] (internal bug)");
    }
}

}  // namespace

ArtinResult artin_reduce(const FormalGroupLaw& ell, size_t t_index, int max_iter) {
    const RingPtr& R = ell.coeff_ring();
    if (R->kind() != RingKind::Poly || R->base()->kind() != RingKind::PrimeField)
        throw PreconditionError("artin_reduce: law must live over k[t,...] with k a prime field");
    if (R->laurent_var() != static_cast<int>(t_index))
        throw PreconditionError("artin_reduce: fibration variable must be the Laurent variable");
    const int N = ell.order();
    if (max_iter < 0) max_iter = 2 * N;

    int tdeg_max = 0;
    for (const auto& [e, c] : ell.series().terms()) {
        (void)e;
        if (!c.poly().is_zero()) tdeg_max = std::max(tdeg_max, c.poly().degree_in(t_index));
    }
    // a t-free law is an ordinary elliptic curve, not a K3 fibration
    if (tdeg_max < 1)
        throw PreconditionError("artin_reduce: law has no t-dependence (not a K3 fibration)");
    const int clamp = N * tdeg_max;

    TruncSeries ineg = formal_inverse(ell);

    // F = G(x/t, y/t): coefficient of x^i y^j picks up t^-(i+j)
    TruncSeries F = TruncSeries::zero(R, ell.series().vars(), N);
    for (const auto& [e, c] : ell.series().terms())
        F.set_coefficient(e, RingElement(c.poly().shifted(t_index, -(e[0] + e[1]))));

    const RingElement x_over_t =
        RingElement(MultiPoly::variable(R, t_index, -1));

    int iterations = 0;
    int last_min_bad = 0;
    while (true) {
        TruncSeries Bp = TruncSeries::zero(R, F.vars(), N);
        TruncSeries Bm = TruncSeries::zero(R, F.vars(), N);
        int min_bad = N;
        for (const auto& [e, c] : F.terms()) {
            MultiPoly hi(R), lo(R);
            split_bad(c.poly(), t_index, hi, lo);
            if (!hi.is_zero()) Bp.set_coefficient(e, RingElement(hi));
            if (!lo.is_zero()) Bm.set_coefficient(e, RingElement(lo));
            if (!hi.is_zero() || !lo.is_zero()) min_bad = std::min(min_bad, e.total_degree());
        }
        if (Bp.is_zero() && Bm.is_zero()) break;
        if (iterations >= max_iter) {
            int count = 0;
            for (const auto& s : {Bp, Bm}) count += static_cast<int>(s.terms().size());
            throw Error("artin_reduce: max_iter=" + std::to_string(max_iter) + " exceeded with " +
                        std::to_string(count) + " residual non-(-1) monomials");
        }
        // the corrections enter at strictly higher series degree each round
        if (iterations > 0 && min_bad <= last_min_bad)
            throw Error("artin_reduce: stalled (minimal bad degree " + std::to_string(min_bad) +
                        " did not increase)");
        last_min_bad = min_bad;
        ++iterations;
        for (const TruncSeries* B : {&Bp, &Bm}) {
            if (B->is_zero()) continue;
            TruncSeries negB = series_substitute(ineg, {*B});
            F = series_substitute(ell.series(), {F, negB});
        }
        // the reduction preserves unitality: F(x,0) = x/t every round
        TruncSeries fx0 = F.at_zero(1);
        bool unital = fx0.terms().size() == 1 && fx0.coefficient(1) == x_over_t;
        if (!unital) throw Error("artin_reduce: unitality x/t broken during iteration");
        check_laurent_bounds(F, t_index, clamp);
    }

    // law = t*F; every coefficient must now be t-free
    TruncSeries law = TruncSeries::zero(R, F.vars(), N);
    for (const auto& [e, c] : F.terms()) {
        MultiPoly shifted = c.poly().shifted(t_index, 1);
        if (!shifted.is_zero() &&
            (shifted.degree_in(t_index) != 0 || shifted.valuation_in(t_index) != 0))
            throw Error("artin_reduce: residual t-dependence after convergence");
        law.set_coefficient(e, RingElement(std::move(shifted)));
    }
    return ArtinResult{FormalGroupLaw::validate(std::move(law)), iterations};
}

ArtinResult artin_family(const WeierstrassModel& W, int order, int max_iter) {
    K3ShapeReport shape = validate_k3(W);
    if (!shape.is_k3_shape)
        throw PreconditionError(
            "artin_family: Weierstrass model is not K3-shaped (need deg a_i <= 2i and deg a_i > i "
            "for some i)");
    FormalGroupLaw ell = specialize(W, order);
    return artin_reduce(ell, W.t_index, max_iter);
}

Char2Height char2_height_predicate(const std::map<std::pair<int, int>, int>& aij) {
    auto get = [&](int i, int j) {
        auto it = aij.find({i, j});
        int v = it == aij.end() ? 0 : it->second;
        return ((v % 2) + 2) % 2;
    };
    for (const auto& [key, val] : aij) {
        auto [i, j] = key;
        if (i == 2 && val % 2 != 0)
            throw PreconditionError("char2_height_predicate: normalization requires a2 = 0");
        if (i != 1 && i != 2 && i != 3 && i != 4 && i != 6)
            throw PreconditionError("char2_height_predicate: invalid coefficient index");
        if (j < 0 || j > 2 * i)
            throw PreconditionError("char2_height_predicate: exponent exceeds deg bound 2i");
    }
    if (get(1, 2) != 1)
        throw PreconditionError("char2_height_predicate: normalization requires a_{1,2} = 1");
    if (get(1, 1) != 0) return Char2Height::H1;
    if (get(3, 3) != 0) return Char2Height::AtLeast2;
    // the corrected degree-2 obstruction polynomial
    int s = get(1, 0) * get(1, 0) * get(1, 0) * get(4, 7) + get(1, 0) * get(1, 0) * get(4, 5) +
            get(1, 0) * get(3, 1) * get(3, 6) + get(1, 0) * get(3, 2) * get(3, 5) +
            get(1, 0) * get(4, 3) + get(1, 0) * get(6, 7) + get(3, 0) * get(3, 5) +
            get(3, 0) * get(4, 7) + get(3, 1) * get(3, 4) + get(3, 1) * get(4, 6) +
            get(3, 2) * get(4, 5) + get(3, 4) * get(4, 3) + get(3, 5) * get(4, 2) +
            get(3, 6) * get(4, 1) + get(4, 1) + get(6, 5);
    return s % 2 == 0 ? Char2Height::AtLeast4 : Char2Height::AtLeast3;
}

std::string to_string(Char2Height h) {
    switch (h) {
        case Char2Height::H1: return "h=1";
        case Char2Height::AtLeast2: return "h>=2";
        case Char2Height::AtLeast3: return "h>=3";
        case Char2Height::AtLeast4: return "h>=4";
    }
    return "?";
}

}  // namespace brauerkit
