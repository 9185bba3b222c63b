#include "brauerkit/groebner.hpp"

#include <algorithm>

namespace brauerkit {

namespace {

void require_groebner_ring(const RingPtr& ring) {
    if (ring->kind() != RingKind::Poly || ring->base()->kind() != RingKind::PrimeField)
        throw PreconditionError("groebner: ring must be Poly over a PrimeField");
    if (ring->laurent_var() >= 0)
        throw PreconditionError("groebner: Laurent rings unsupported");
    if (ring->var_count() > 5)  // 4 user variables + internal tag
        throw PreconditionError("groebner: variable-count limit exceeded");
}

// raw term-vector helpers (no MultiPoly arithmetic: quotient-ring safe)
using Terms = std::vector<Term>;

size_t find_lead(const Terms& t, const MonomialOrder& ord) {
    size_t best = 0;
    for (size_t i = 1; i < t.size(); ++i)
        if (ord.cmp(t[i].exps, t[best].exps) > 0) best = i;
    return best;
}

Terms sub_scaled_shifted(const Terms& a, const Terms& b, const Scalar& c, const ExpVec& shift,
                         const Ring& sc) {
    // a - c * x^shift * b, recombined
    Terms out = a;
    for (const auto& t : b) {
        ExpVec e = t.exps.plus(shift);
        Scalar s = scalar_neg(scalar_mul(t.coeff, c, sc), sc);
        bool merged = false;
        for (auto& u : out) {
            if (u.exps == e) {
                u.coeff = scalar_add(u.coeff, s, sc);
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({e, std::move(s)});
    }
    Terms clean;
    clean.reserve(out.size());
    for (auto& t : out)
        if (!scalar_is_zero(t.coeff)) clean.push_back(std::move(t));
    return clean;
}

Terms normal_form_terms(Terms p, const std::vector<Terms>& basis,
                        const std::vector<size_t>& basis_leads, const MonomialOrder& ord,
                        const Ring& sc) {
    Terms rem;
    while (!p.empty()) {
        size_t li = find_lead(p, ord);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            const Term& bl = basis[k][basis_leads[k]];
            if (bl.exps.divides(p[li].exps)) {
                Scalar c = scalar_mul(p[li].coeff, scalar_invert(bl.coeff, sc), sc);
                p = sub_scaled_shifted(p, basis[k], c, p[li].exps.minus(bl.exps), sc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(p[li]);
            p.erase(p.begin() + static_cast<long>(li));
        }
    }
    return rem;
}

}  // namespace

Ideal make_ideal(RingPtr ring, std::vector<MultiPoly> gens) {
    require_groebner_ring(ring);
    std::vector<MultiPoly> kept;
    for (auto& g : gens) {
        require_same_ring(g.ring(), ring, "make_ideal");
        if (!g.is_zero()) kept.push_back(std::move(g));
    }
    return Ideal{std::move(ring), std::move(kept), std::nullopt};
}

MultiPoly poly_normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                           const MonomialOrder& order) {
    if (basis.empty()) return p;
    const Ring& sc = basis[0].ring()->kind() == RingKind::Poly
                         ? *basis[0].ring()->base()
                         : *basis[0].ring()->poly_ring()->base();
    std::vector<Terms> braw;
    std::vector<size_t> bleads;
    for (const auto& b : basis) {
        if (b.is_zero()) continue;
        braw.push_back(b.terms());
        bleads.push_back(find_lead(braw.back(), order));
    }
    Terms r = normal_form_terms(p.terms(), braw, bleads, order, sc);
    std::sort(r.begin(), r.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.exps, b.exps) > 0; });
    MultiPoly out(p.ring());
    out.terms_ = std::move(r);  // already reduced and zero-free
    return out;
}

namespace {

std::vector<Terms> buchberger_terms(std::vector<Terms> gens, const MonomialOrder& ord,
                                    const Ring& sc) {
    std::vector<Terms> basis;
    std::vector<size_t> leads;
    auto add_poly = [&](Terms t) {
        if (t.empty()) return false;
        basis.push_back(std::move(t));
        leads.push_back(find_lead(basis.back(), ord));
        return true;
    };
    for (auto& g : gens) {
        Terms nf = normal_form_terms(std::move(g), basis, leads, ord, sc);
        add_poly(std::move(nf));
    }
    // pair queue, deterministic order
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    size_t guard = 0;
    while (!pairs.empty()) {
        if (++guard > 200000) throw Error("buchberger: pair limit exceeded");
        // smallest lcm first keeps reductions cheap
        size_t pick = 0;
        ExpVec best_lcm = basis[pairs[0].first][leads[pairs[0].first]].exps.lcm(
            basis[pairs[0].second][leads[pairs[0].second]].exps);
        for (size_t k = 1; k < pairs.size(); ++k) {
            ExpVec l = basis[pairs[k].first][leads[pairs[k].first]].exps.lcm(
                basis[pairs[k].second][leads[pairs[k].second]].exps);
            if (ord.cmp(l, best_lcm) < 0) {
                best_lcm = l;
                pick = k;
            }
        }
        auto [i, j] = pairs[pick];
        pairs.erase(pairs.begin() + static_cast<long>(pick));
        const Term& li = basis[i][leads[i]];
        const Term& lj = basis[j][leads[j]];
        ExpVec l = li.exps.lcm(lj.exps);
        // Buchberger's first criterion: coprime leads reduce to zero
        if (l == li.exps.plus(lj.exps)) continue;
        // S-polynomial
        Scalar ci = scalar_invert(li.coeff, sc);
        Scalar cj = scalar_invert(lj.coeff, sc);
        Terms spoly;
        for (const auto& t : basis[i])
            spoly.push_back({t.exps.plus(l.minus(li.exps)), scalar_mul(t.coeff, ci, sc)});
        for (const auto& t : basis[j]) {
            ExpVec e = t.exps.plus(l.minus(lj.exps));
            Scalar s = scalar_neg(scalar_mul(t.coeff, cj, sc), sc);
            bool merged = false;
            for (auto& u : spoly)
                if (u.exps == e) {
                    u.coeff = scalar_add(u.coeff, s, sc);
                    merged = true;
                    break;
                }
            if (!merged) spoly.push_back({e, std::move(s)});
        }
        Terms clean;
        for (auto& t : spoly)
            if (!scalar_is_zero(t.coeff)) clean.push_back(std::move(t));
        Terms nf = normal_form_terms(std::move(clean), basis, leads, ord, sc);
        if (add_poly(std::move(nf))) {
            for (size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
        }
    }
    // minimalize: drop polys whose lead divides by another's lead
    std::vector<bool> keep(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (basis[j][leads[j]].exps.divides(basis[i][leads[i]].exps) &&
                !(basis[i][leads[i]].exps == basis[j][leads[j]].exps && j > i))
                keep[i] = false;
        }
    std::vector<Terms> minimal;
    std::vector<size_t> mleads;
    for (size_t i = 0; i < basis.size(); ++i)
        if (keep[i]) {
            minimal.push_back(basis[i]);
            mleads.push_back(leads[i]);
        }
    // full reduction: tail-reduce each element against the others, normalize lead to 1
    std::vector<Terms> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Terms> others;
        std::vector<size_t> oleads;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) {
                others.push_back(minimal[j]);
                oleads.push_back(mleads[j]);
            }
        Terms nf = normal_form_terms(minimal[i], others, oleads, ord, sc);
        if (nf.empty()) continue;
        size_t l = find_lead(nf, ord);
        Scalar inv = scalar_invert(nf[l].coeff, sc);
        for (auto& t : nf) t.coeff = scalar_mul(t.coeff, inv, sc);
        reduced.push_back(std::move(nf));
    }
    return reduced;
}

}  // namespace

Ideal buchberger(const Ideal& I) {
    require_groebner_ring(I.ring);
    if (I.ring->var_count() > 4)
        throw PreconditionError("buchberger: more than 4 variables");
    if (I.groebner) return I;
    const Ring& sc = *I.ring->base();
    std::vector<Terms> gens;
    for (const auto& g : I.gens)
        if (!g.is_zero()) gens.push_back(g.terms());
    MonomialOrder ord{};
    auto basis = buchberger_terms(std::move(gens), ord, sc);
    std::vector<MultiPoly> out;
    for (auto& b : basis) out.push_back(MultiPoly::from_terms(I.ring, std::move(b)));
    // canonical element order for the cached basis
    std::sort(out.begin(), out.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return grevlex_cmp(a.leading_term().exps, b.leading_term().exps) < 0;
    });
    Ideal r = I;
    r.groebner = std::move(out);
    return r;
}

bool in_ideal(const MultiPoly& p, const Ideal& I) {
    const Ideal& J = I.groebner ? I : buchberger(I);
    return poly_normal_form(p, *J.groebner, MonomialOrder{}).is_zero();
}

Ideal ideal_quotient(const Ideal& I, const MultiPoly& v) {
    require_same_ring(v.ring(), I.ring, "ideal_quotient");
    if (v.is_zero()) throw PreconditionError("ideal_quotient: v = 0");
    const RingPtr& R = I.ring;
    // extended ring with tag variable, elimination order on it
    std::vector<std::string> vars = R->vars();
    vars.push_back("@u");
    size_t tag = vars.size() - 1;
    RingPtr Ru = Ring::poly(R->base(), vars);
    MonomialOrder ord{static_cast<int>(tag)};
    auto lift = [&](const MultiPoly& p) {
        std::vector<Term> ts;
        for (const auto& t : p.terms()) {
            ExpVec e(vars.size());
            for (size_t i = 0; i < t.exps.size(); ++i) e.set(i, t.exps[i]);
            ts.push_back({e, t.coeff});
        }
        return MultiPoly::from_terms(Ru, std::move(ts));
    };
    MultiPoly u = MultiPoly::variable(Ru, tag);
    MultiPoly one_minus_u = MultiPoly::constant(Ru, 1) - u;
    std::vector<Terms> gens;
    for (const auto& g : I.gens)
        if (!g.is_zero()) gens.push_back((u * lift(g)).terms());
    gens.push_back((one_minus_u * lift(v)).terms());
    auto basis = buchberger_terms(std::move(gens), ord, *R->base());
    // intersection: elements not involving the tag; then exact division by v
    std::vector<MultiPoly> qgens;
    for (auto& b : basis) {
        bool has_tag = false;
        for (const auto& t : b)
            if (t.exps[tag] != 0) {
                has_tag = true;
                break;
            }
        if (has_tag) continue;
        std::vector<Term> ts;
        for (const auto& t : b) {
            ExpVec e(R->var_count());
            for (size_t i = 0; i < R->var_count(); ++i) e.set(i, t.exps[i]);
            ts.push_back({e, t.coeff});
        }
        MultiPoly g = MultiPoly::from_terms(R, std::move(ts));
        MultiPoly q(R);
        if (!poly_divide_exact(q, g, v))
            throw Error("ideal_quotient: intersection element not divisible by v");
        qgens.push_back(std::move(q));
    }
    return buchberger(make_ideal(R, std::move(qgens)));
}

bool is_zero_divisor(const MultiPoly& v, const Ideal& I) {
    require_same_ring(v.ring(), I.ring, "is_zero_divisor");
    Ideal J = I.groebner ? I : buchberger(I);
    if (is_unit_ideal(J)) return false;  // zero ring: no zero divisors
    MultiPoly nf = poly_normal_form(v, *J.groebner, MonomialOrder{});
    if (nf.is_zero()) return true;  // v = 0 on a nonzero quotient
    Ideal Q = ideal_quotient(J, v);
    for (const auto& g : *Q.groebner)
        if (!poly_normal_form(g, *J.groebner, MonomialOrder{}).is_zero()) return true;
    return false;
}

bool is_unit_ideal(const Ideal& I) {
    const Ideal& J = I.groebner ? I : buchberger(I);
    return J.groebner->size() == 1 && (*J.groebner)[0].is_constant() &&
           !(*J.groebner)[0].is_zero();
}

std::vector<ExpVec> standard_monomials(const Ideal& I, size_t limit) {
    const Ideal& J = I.groebner ? I : buchberger(I);
    size_t n = J.ring->var_count();
    // bound per-variable degree: need a pure power of each variable among leads
    std::vector<int> bound(n, -1);
    for (const auto& g : *J.groebner) {
        const ExpVec& e = g.leading_term().exps;
        int nz = -1;
        bool pure = true;
        for (size_t i = 0; i < n; ++i)
            if (e[i] != 0) {
                if (nz >= 0) pure = false;
                nz = static_cast<int>(i);
            }
        if (pure && nz >= 0 && (bound[nz] < 0 || e[nz] < bound[nz])) bound[nz] = e[nz];
        if (pure && nz < 0) return {};  // basis contains a unit
    }
    for (size_t i = 0; i < n; ++i)
        if (bound[i] < 0) throw PreconditionError("standard_monomials: ideal not zero-dimensional");
    std::vector<ExpVec> out;
    std::vector<int> cur(n, 0);
    while (true) {
        ExpVec e(n);
        for (size_t i = 0; i < n; ++i) e.set(i, cur[i]);
        bool divisible = false;
        for (const auto& g : *J.groebner)
            if (g.leading_term().exps.divides(e)) {
                divisible = true;
                break;
            }
        if (!divisible) {
            out.push_back(e);
            if (out.size() > limit) throw Error("standard_monomials: limit exceeded");
        }
        size_t i = 0;
        while (i < n) {
            if (++cur[i] < bound[i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

bool is_local_at_origin(const Ideal& I) {
    Ideal J = I.groebner ? I : buchberger(I);
    if (is_unit_ideal(J)) return false;
    std::vector<ExpVec> std_mons;
    try {
        std_mons = standard_monomials(J);
    } catch (const PreconditionError&) {
        return false;  // not zero-dimensional
    }
    size_t dim = std_mons.size();
    // each variable nilpotent mod I: x_i^dim reduces to 0
    for (size_t i = 0; i < J.ring->var_count(); ++i) {
        MultiPoly xi = MultiPoly::variable(J.ring, i, static_cast<int>(dim));
        if (!poly_normal_form(xi, *J.groebner, MonomialOrder{}).is_zero()) return false;
    }
    return true;
}

}  // namespace brauerkit
