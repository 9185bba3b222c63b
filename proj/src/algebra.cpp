#include "brauerkit/algebra.hpp"
#include "brauerkit/groebner.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

namespace brauerkit {

// ---------------------------------------------------------------------------
// Ring

static bool is_prime_trial(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RingPtr Ring::integers() {
    static const RingPtr r = [] {
        auto q = std::shared_ptr<Ring>(new Ring());
        q->kind_ = RingKind::Integers;
        return RingPtr(q);
    }();
    return r;
}

RingPtr Ring::rationals() {
    static const RingPtr r = [] {
        auto q = std::shared_ptr<Ring>(new Ring());
        q->kind_ = RingKind::Rationals;
        return RingPtr(q);
    }();
    return r;
}

RingPtr Ring::integers_mod(const Int& m) {
    if (m <= 1) throw PreconditionError("IntegersMod: modulus must be > 1");
    auto q = std::shared_ptr<Ring>(new Ring());
    q->kind_ = RingKind::IntegersMod;
    q->modulus_ = m;
    return q;
}

RingPtr Ring::prime_field(unsigned long p) {
    if (!is_prime_trial(p)) throw PreconditionError("PrimeField: " + std::to_string(p) + " is not prime");
    auto q = std::shared_ptr<Ring>(new Ring());
    q->kind_ = RingKind::PrimeField;
    q->modulus_ = Int(static_cast<long>(p));
    return q;
}

RingPtr Ring::poly(RingPtr base, std::vector<std::string> vars, int laurent_var) {
    if (!base || !base->is_scalar_kind())
        throw PreconditionError("Poly: base ring must be a scalar ring");
    if (vars.empty() || vars.size() > kMaxVars)
        throw PreconditionError("Poly: variable count out of range");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw PreconditionError("Poly: duplicate variable " + vars[i]);
    if (laurent_var >= static_cast<int>(vars.size()))
        throw PreconditionError("Poly: laurent variable index out of range");
    auto q = std::shared_ptr<Ring>(new Ring());
    q->kind_ = RingKind::Poly;
    q->base_ = std::move(base);
    q->vars_ = std::move(vars);
    q->laurent_var_ = laurent_var;
    return q;
}

RingPtr detail_make_quotient(RingPtr poly_ring, std::vector<MultiPoly> basis) {
    auto q = std::shared_ptr<Ring>(new Ring());
    q->kind_ = RingKind::Quotient;
    q->base_ = std::move(poly_ring);
    q->quot_basis_ = std::make_shared<std::vector<MultiPoly>>(std::move(basis));
    return q;
}

RingPtr Ring::quotient(RingPtr poly_ring, std::vector<MultiPoly> gens) {
    if (!poly_ring || poly_ring->kind() != RingKind::Poly ||
        poly_ring->base()->kind() != RingKind::PrimeField)
        throw PreconditionError("Quotient: base must be a Poly ring over a PrimeField");
    if (poly_ring->laurent_var() >= 0)
        throw PreconditionError("Quotient: Laurent rings not supported");
    for (auto& g : gens) require_same_ring(g.ring(), poly_ring, "Quotient");
    Ideal I{poly_ring, std::move(gens), std::nullopt};
    Ideal J = buchberger(I);
    return detail_make_quotient(std::move(poly_ring), *J.groebner);
}

RingPtr Ring::poly_ring() const {
    if (kind_ == RingKind::Quotient) return base_;
    throw Error("poly_ring: not a quotient ring");
}

static const std::vector<std::string> kNoVars;

const std::vector<std::string>& Ring::vars() const {
    if (kind_ == RingKind::Poly) return vars_;
    if (kind_ == RingKind::Quotient) return base_->vars();
    return kNoVars;
}

int Ring::laurent_var() const {
    if (kind_ == RingKind::Poly) return laurent_var_;
    if (kind_ == RingKind::Quotient) return base_->laurent_var();
    return -1;
}

int Ring::var_index(const std::string& name) const {
    const auto& vs = vars();
    for (size_t i = 0; i < vs.size(); ++i)
        if (vs[i] == name) return static_cast<int>(i);
    return -1;
}

bool Ring::contains_rationals() const {
    if (kind_ == RingKind::Rationals) return true;
    if (kind_ == RingKind::Poly) return base_->contains_rationals();
    return false;
}

bool Ring::is_char_p(unsigned long p) const {
    const Ring* r = this;
    if (kind_ == RingKind::Poly || kind_ == RingKind::Quotient) {
        if (kind_ == RingKind::Quotient) r = base_->base().get();
        else r = base_.get();
    }
    return (r->kind() == RingKind::PrimeField || r->kind() == RingKind::IntegersMod) &&
           r->modulus() == Int(static_cast<long>(p));
}

const std::vector<MultiPoly>& Ring::quotient_basis() const {
    if (kind_ != RingKind::Quotient) throw Error("quotient_basis: not a quotient ring");
    return *quot_basis_;
}

bool Ring::equals(const Ring& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case RingKind::Integers:
        case RingKind::Rationals: return true;
        case RingKind::IntegersMod:
        case RingKind::PrimeField: return modulus_ == o.modulus_;
        case RingKind::Poly:
            return vars_ == o.vars_ && laurent_var_ == o.laurent_var_ && base_->equals(*o.base_);
        case RingKind::Quotient: {
            if (!base_->equals(*o.base_)) return false;
            if (quot_basis_->size() != o.quot_basis_->size()) return false;
            for (size_t i = 0; i < quot_basis_->size(); ++i)
                if ((*quot_basis_)[i] != (*o.quot_basis_)[i]) return false;
            return true;
        }
    }
    return false;
}

std::string Ring::describe() const {
    switch (kind_) {
        case RingKind::Integers: return "ZZ";
        case RingKind::Rationals: return "QQ";
        case RingKind::IntegersMod: return "ZZ/" + modulus_.get_str();
        case RingKind::PrimeField: return "GF(" + modulus_.get_str() + ")";
        case RingKind::Poly: {
            std::string s = base_->describe() + "[";
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (i) s += ",";
                s += vars_[i];
                if (static_cast<int>(i) == laurent_var_) s += "^+-";
            }
            return s + "]";
        }
        case RingKind::Quotient: {
            std::string s = base_->describe() + "/(";
            const auto& b = *quot_basis_;
            for (size_t i = 0; i < b.size(); ++i) {
                if (i) s += ", ";
                s += b[i].to_string();
            }
            return s + ")";
        }
    }
    return "?";
}

// ---------------------------------------------------------------------------
// scalars

bool scalar_is_zero(const Scalar& a) {
    if (auto* z = std::get_if<Int>(&a)) return *z == 0;
    return std::get<Rat>(a) == 0;
}

static Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Scalar scalar_add(const Scalar& a, const Scalar& b, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return Rat(std::get<Rat>(a) + std::get<Rat>(b));
        case RingKind::Integers: return Int(std::get<Int>(a) + std::get<Int>(b));
        default: return mod_reduce(std::get<Int>(a) + std::get<Int>(b), ring.modulus());
    }
}

Scalar scalar_sub(const Scalar& a, const Scalar& b, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return Rat(std::get<Rat>(a) - std::get<Rat>(b));
        case RingKind::Integers: return Int(std::get<Int>(a) - std::get<Int>(b));
        default: return mod_reduce(std::get<Int>(a) - std::get<Int>(b), ring.modulus());
    }
}

Scalar scalar_mul(const Scalar& a, const Scalar& b, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return Rat(std::get<Rat>(a) * std::get<Rat>(b));
        case RingKind::Integers: return Int(std::get<Int>(a) * std::get<Int>(b));
        default: return mod_reduce(std::get<Int>(a) * std::get<Int>(b), ring.modulus());
    }
}

Scalar scalar_neg(const Scalar& a, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return Rat(-std::get<Rat>(a));
        case RingKind::Integers: return Int(-std::get<Int>(a));
        default: return mod_reduce(-std::get<Int>(a), ring.modulus());
    }
}

Scalar scalar_from_int(const Int& n, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return Rat(n);
        case RingKind::Integers: return n;
        default: return mod_reduce(n, ring.modulus());
    }
}

Scalar scalar_from_rat(const Rat& q, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return q;
        case RingKind::Integers: {
            if (q.get_den() != 1) throw PreconditionError("scalar_from_rat: not an integer");
            return Int(q.get_num());
        }
        default: {
            Int den = q.get_den(), inv;
            if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ring.modulus().get_mpz_t()) == 0)
                throw PreconditionError("scalar_from_rat: denominator " + den.get_str() +
                                        " not invertible mod " + ring.modulus().get_str());
            return mod_reduce(q.get_num() * inv, ring.modulus());
        }
    }
}

bool scalar_is_unit(const Scalar& a, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: return std::get<Rat>(a) != 0;
        case RingKind::Integers: {
            const Int& z = std::get<Int>(a);
            return z == 1 || z == -1;
        }
        default: {
            Int g;
            mpz_gcd(g.get_mpz_t(), std::get<Int>(a).get_mpz_t(), ring.modulus().get_mpz_t());
            return g == 1;
        }
    }
}

Scalar scalar_invert(const Scalar& a, const Ring& ring) {
    switch (ring.kind()) {
        case RingKind::Rationals: {
            const Rat& q = std::get<Rat>(a);
            if (q == 0) throw PreconditionError("scalar_invert: zero");
            return Rat(1 / q);
        }
        case RingKind::Integers: {
            const Int& z = std::get<Int>(a);
            if (z != 1 && z != -1) throw PreconditionError("scalar_invert: non-unit integer");
            return z;
        }
        default: {
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), std::get<Int>(a).get_mpz_t(),
                           ring.modulus().get_mpz_t()) == 0)
                throw PreconditionError("scalar_invert: non-unit residue");
            return inv;
        }
    }
}

bool scalar_divide_exact(Scalar& out, const Scalar& a, const Scalar& b, const Ring& ring) {
    if (scalar_is_zero(b)) return false;
    switch (ring.kind()) {
        case RingKind::Rationals:
            out = Rat(std::get<Rat>(a) / std::get<Rat>(b));
            return true;
        case RingKind::Integers: {
            const Int &x = std::get<Int>(a), &y = std::get<Int>(b);
            if (!mpz_divisible_p(x.get_mpz_t(), y.get_mpz_t())) return false;
            Int q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            out = q;
            return true;
        }
        default: {
            if (!scalar_is_unit(b, ring)) return false;
            out = scalar_mul(a, scalar_invert(b, ring), ring);
            return true;
        }
    }
}

std::string scalar_to_string(const Scalar& a) {
    if (auto* z = std::get_if<Int>(&a)) return z->get_str();
    return std::get<Rat>(a).get_str();
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_ || ring_->is_scalar_kind()) throw PreconditionError("MultiPoly: need a Poly/Quotient ring");
}

MultiPoly MultiPoly::constant(RingPtr ring, const Scalar& c) {
    MultiPoly p(std::move(ring));
    if (!scalar_is_zero(c)) p.terms_.push_back({ExpVec(p.var_count()), c});
    p.canonicalize();
    return p;
}

MultiPoly MultiPoly::constant(RingPtr ring, long c) {
    const Ring& sc = ring->kind() == RingKind::Quotient ? *ring->poly_ring()->base() : *ring->base();
    return constant(std::move(ring), scalar_from_int(Int(c), sc));
}

MultiPoly MultiPoly::variable(RingPtr ring, size_t var_index, int exp) {
    MultiPoly p(ring);
    if (var_index >= p.var_count()) throw PreconditionError("MultiPoly::variable: bad index");
    ExpVec e(p.var_count());
    e.set(var_index, exp);
    const Ring& sc = *(ring->kind() == RingKind::Quotient ? ring->poly_ring()->base() : ring->base());
    p.terms_.push_back({e, scalar_from_int(Int(1), sc)});
    p.canonicalize();
    return p;
}

MultiPoly MultiPoly::monomial(RingPtr ring, const ExpVec& e, const Scalar& c) {
    MultiPoly p(std::move(ring));
    if (!scalar_is_zero(c)) p.terms_.push_back({e, c});
    p.canonicalize();
    return p;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
}

static const Ring& scalar_ring_of(const RingPtr& r) {
    return r->kind() == RingKind::Quotient ? *r->poly_ring()->base() : *r->base();
}

void MultiPoly::canonicalize() {
    const Ring& sc = scalar_ring_of(ring_);
    int lv = ring_->laurent_var();
    for (auto& t : terms_) {
        if (t.exps.size() != var_count()) throw PreconditionError("MultiPoly: exponent arity mismatch");
        for (size_t i = 0; i < t.exps.size(); ++i)
            if (t.exps[i] < 0 && static_cast<int>(i) != lv)
                throw PreconditionError("MultiPoly: negative exponent outside Laurent variable");
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.exps, b.exps) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exps == t.exps)
            out.back().coeff = scalar_add(out.back().coeff, t.coeff, sc);
        else
            out.push_back(std::move(t));
    }
    terms_.clear();
    for (auto& t : out)
        if (!scalar_is_zero(t.coeff)) terms_.push_back(std::move(t));
    if (ring_->kind() == RingKind::Quotient && !terms_.empty()) {
        // reduce against the cached basis (represented in the quotient ring itself)
        MultiPoly rep = *this;
        rep.ring_ = ring_;  // keep ring; normal form works on term data
        *this = poly_normal_form(rep, ring_->quotient_basis(), MonomialOrder{});
    }
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exps.total_degree());
    return d;
}

int MultiPoly::degree_in(size_t var) const {
    int d = INT_MIN;
    for (const auto& t : terms_) d = std::max(d, t.exps[var]);
    return d;
}

int MultiPoly::valuation_in(size_t var) const {
    if (terms_.empty()) return 0;
    int d = INT_MAX;
    for (const auto& t : terms_) d = std::min(d, t.exps[var]);
    return d;
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    return terms_.front();
}

Scalar MultiPoly::coefficient_of(const ExpVec& e) const {
    if (e.size() != var_count()) throw PreconditionError("coefficient_of: arity mismatch");
    for (const auto& t : terms_)
        if (t.exps == e) return t.coeff;
    const Ring& sc = scalar_ring_of(ring_);
    return scalar_from_int(Int(0), sc);
}

MultiPoly MultiPoly::coefficient_poly(const std::vector<size_t>& fixed_vars,
                                      const std::vector<int>& fixed_exps,
                                      const RingPtr& target) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        bool match = true;
        for (size_t k = 0; k < fixed_vars.size(); ++k)
            if (t.exps[fixed_vars[k]] != fixed_exps[k]) { match = false; break; }
        if (!match) continue;
        ExpVec e(target->var_count());
        size_t j = 0;
        for (size_t i = 0; i < t.exps.size(); ++i) {
            if (std::find(fixed_vars.begin(), fixed_vars.end(), i) != fixed_vars.end()) continue;
            e.set(j++, t.exps[i]);
        }
        if (j != target->var_count()) throw PreconditionError("coefficient_poly: arity mismatch");
        out.push_back({e, t.coeff});
    }
    return MultiPoly::from_terms(target, std::move(out));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_, "poly add");
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    const Ring& sc = scalar_ring_of(ring_);
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = grevlex_cmp(terms_[i].exps, o.terms_[j].exps);
        if (c > 0) out.push_back(terms_[i++]);
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            Scalar s = scalar_add(terms_[i].coeff, o.terms_[j].coeff, sc);
            if (!scalar_is_zero(s)) out.push_back({terms_[i].exps, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
    MultiPoly r(ring_);
    r.terms_ = std::move(out);
    if (ring_->kind() == RingKind::Quotient) r.canonicalize();
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(ring_);
    const Ring& sc = scalar_ring_of(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.exps, scalar_neg(t.coeff, sc)});
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_ring(ring_, o.ring_, "poly mul");
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    const Ring& sc = scalar_ring_of(ring_);
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            prods.push_back({a.exps.plus(b.exps), scalar_mul(a.coeff, b.coeff, sc)});
    return MultiPoly::from_terms(ring_, std::move(prods));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!ring_->equals(*o.ring_) || terms_.size() != o.terms_.size()) return false;
    const Ring& sc = scalar_ring_of(ring_);
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exps != o.terms_[i].exps) return false;
        if (!scalar_is_zero(scalar_sub(terms_[i].coeff, o.terms_[i].coeff, sc))) return false;
    }
    return true;
}

MultiPoly MultiPoly::scaled(const Scalar& c) const {
    const Ring& sc = scalar_ring_of(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar s = scalar_mul(t.coeff, c, sc);
        if (!scalar_is_zero(s)) out.push_back({t.exps, std::move(s)});
    }
    MultiPoly r(ring_);
    r.terms_ = std::move(out);
    if (ring_->kind() == RingKind::Quotient) r.canonicalize();
    return r;
}

MultiPoly MultiPoly::shifted(size_t var, int delta) const {
    if (delta != 0 && static_cast<int>(var) != ring_->laurent_var()) {
        if (delta < 0) {
            for (const auto& t : terms_)
                if (t.exps[var] + delta < 0)
                    throw PreconditionError("shifted: negative exponent outside Laurent variable");
        }
    }
    MultiPoly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        ExpVec e = t.exps;
        e.set(var, e[var] + delta);
        r.terms_.push_back({e, t.coeff});
    }
    // shifting preserves grevlex order within a fixed shift
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_cmp(a.exps, b.exps) > 0; });
    return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(ring_, 1);
    MultiPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

MultiPoly MultiPoly::map_to(const RingPtr& target,
                            const std::vector<std::optional<MultiPoly>>& assignment) const {
    const Ring& tsc = scalar_ring_of(target);
    MultiPoly result(target);
    for (const auto& t : terms_) {
        // scalar image
        Scalar c = std::holds_alternative<Rat>(t.coeff) ? scalar_from_rat(std::get<Rat>(t.coeff), tsc)
                                                        : scalar_from_int(std::get<Int>(t.coeff), tsc);
        MultiPoly term = MultiPoly::constant(target, c);
        for (size_t i = 0; i < t.exps.size(); ++i) {
            int e = t.exps[i];
            if (e == 0) continue;
            MultiPoly img(target);
            if (i < assignment.size() && assignment[i].has_value()) {
                img = *assignment[i];
                require_same_ring(img.ring(), target, "map_to");
            } else {
                int vi = target->var_index(ring_->vars()[i]);
                if (vi < 0)
                    throw PreconditionError("map_to: variable " + ring_->vars()[i] +
                                            " has no image in target ring");
                img = MultiPoly::variable(target, static_cast<size_t>(vi));
            }
            if (e < 0) {
                // negative powers only for a variable mapping to a Laurent variable
                if (img.terms().size() == 1 && img.terms()[0].exps.total_degree() == 1) {
                    size_t vi = 0;
                    for (size_t k = 0; k < img.terms()[0].exps.size(); ++k)
                        if (img.terms()[0].exps[k] == 1) vi = k;
                    term = term * MultiPoly::variable(target, vi, e);
                    continue;
                }
                throw PreconditionError("map_to: negative power of a non-variable image");
            }
            term = term * img.pow(static_cast<unsigned>(e));
        }
        result = result + term;
    }
    return result;
}

MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& caps) {
    require_same_ring(a.ring(), b.ring(), "mul_capped");
    const Ring& sc = scalar_ring_of(a.ring());
    std::vector<Term> prods;
    prods.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) {
            ExpVec e = ta.exps.plus(tb.exps);
            bool ok = true;
            for (size_t i = 0; i < caps.size() && ok; ++i)
                if (caps[i] >= 0 && e[i] > caps[i]) ok = false;
            if (!ok) continue;
            prods.push_back({e, scalar_mul(ta.coeff, tb.coeff, sc)});
        }
    return MultiPoly::from_terms(a.ring(), std::move(prods));
}

bool poly_divide_exact(MultiPoly& quotient, const MultiPoly& num, const MultiPoly& den) {
    require_same_ring(num.ring(), den.ring(), "poly_divide_exact");
    if (den.is_zero()) return false;
    const Ring& sc = scalar_ring_of(num.ring());
    MultiPoly rem = num;
    std::vector<Term> qterms;
    const Term& lt = den.leading_term();
    while (!rem.is_zero()) {
        const Term& rt = rem.leading_term();
        if (!lt.exps.divides(rt.exps)) return false;
        Scalar c;
        if (!scalar_divide_exact(c, rt.coeff, lt.coeff, sc)) return false;
        ExpVec e = rt.exps.minus(lt.exps);
        qterms.push_back({e, c});
        rem = rem - den * MultiPoly::monomial(num.ring(), e, c);
    }
    quotient = MultiPoly::from_terms(num.ring(), std::move(qterms));
    return true;
}

MultiPoly poly_derivative(const MultiPoly& p, size_t var) {
    const Ring& sc = scalar_ring_of(p.ring());
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        int e = t.exps[var];
        if (e == 0) continue;
        ExpVec ne = t.exps;
        ne.set(var, e - 1);
        out.push_back({ne, scalar_mul(t.coeff, scalar_from_int(Int(e), sc), sc)});
    }
    return MultiPoly::from_terms(p.ring(), std::move(out));
}

Scalar poly_eval(const MultiPoly& p, const std::vector<Scalar>& point) {
    const Ring& sc = scalar_ring_of(p.ring());
    if (point.size() != p.var_count()) throw PreconditionError("poly_eval: arity mismatch");
    Scalar acc = scalar_from_int(Int(0), sc);
    for (const auto& t : p.terms()) {
        Scalar term = t.coeff;
        for (size_t i = 0; i < point.size(); ++i) {
            int e = t.exps[i];
            if (e < 0) throw PreconditionError("poly_eval: Laurent evaluation unsupported");
            for (int k = 0; k < e; ++k) term = scalar_mul(term, point[i], sc);
        }
        acc = scalar_add(acc, term, sc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// rendering

static bool scalar_is_neg(const Scalar& s) {
    if (auto* z = std::get_if<Int>(&s)) return *z < 0;
    return std::get<Rat>(s) < 0;
}

static std::string scalar_abs_str(const Scalar& s) {
    if (auto* z = std::get_if<Int>(&s)) return Int(abs(*z)).get_str();
    return Rat(abs(std::get<Rat>(s))).get_str();
}

static bool scalar_abs_is_one(const Scalar& s) {
    if (auto* z = std::get_if<Int>(&s)) return *z == 1 || *z == -1;
    const Rat& q = std::get<Rat>(s);
    return q == 1 || q == -1;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const auto& names = ring_->vars();
    bool first = true;
    for (const auto& t : terms_) {
        bool neg = scalar_is_neg(t.coeff);
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool any_var = !t.exps.is_zero();
        bool unit = scalar_abs_is_one(t.coeff);
        if (!unit || !any_var) os << scalar_abs_str(t.coeff);
        if (any_var) {
            bool need_star = !unit;
            for (size_t i = 0; i < t.exps.size(); ++i) {
                int e = t.exps[i];
                if (e == 0) continue;
                if (need_star) os << "*";
                os << names[i];
                if (e != 1) os << "^" << e;
                need_star = true;
            }
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingPtr ring, Scalar s) : ring_(std::move(ring)), v_(std::move(s)) {
    if (!ring_->is_scalar_kind()) throw PreconditionError("RingElement: scalar in non-scalar ring");
}

RingElement::RingElement(MultiPoly p) : ring_(p.ring()), v_(std::move(p)) {}

RingElement RingElement::zero(RingPtr ring) { return from_int(std::move(ring), Int(0)); }
RingElement RingElement::one(RingPtr ring) { return from_int(std::move(ring), Int(1)); }

RingElement RingElement::from_int(RingPtr ring, const Int& n) {
    if (ring->is_scalar_kind()) return RingElement(ring, scalar_from_int(n, *ring));
    const Ring& sc = scalar_ring_of(ring);
    return RingElement(MultiPoly::constant(ring, scalar_from_int(n, sc)));
}

RingElement RingElement::from_rat(RingPtr ring, const Rat& q) {
    if (ring->is_scalar_kind()) return RingElement(ring, scalar_from_rat(q, *ring));
    const Ring& sc = scalar_ring_of(ring);
    return RingElement(MultiPoly::constant(ring, scalar_from_rat(q, sc)));
}

bool RingElement::is_zero() const {
    if (is_scalar()) return scalar_is_zero(scalar());
    return poly().is_zero();
}

bool RingElement::is_one() const {
    if (is_scalar()) {
        Scalar one = scalar_from_int(Int(1), *ring_);
        return scalar_is_zero(scalar_sub(scalar(), one, *ring_));
    }
    return poly() == MultiPoly::constant(ring_, 1);
}

RingElement RingElement::operator+(const RingElement& o) const {
    require_same_ring(ring_, o.ring_, "element add");
    if (is_scalar()) return RingElement(ring_, scalar_add(scalar(), o.scalar(), *ring_));
    return RingElement(poly() + o.poly());
}

RingElement RingElement::operator-(const RingElement& o) const {
    require_same_ring(ring_, o.ring_, "element sub");
    if (is_scalar()) return RingElement(ring_, scalar_sub(scalar(), o.scalar(), *ring_));
    return RingElement(poly() - o.poly());
}

RingElement RingElement::operator*(const RingElement& o) const {
    require_same_ring(ring_, o.ring_, "element mul");
    if (is_scalar()) return RingElement(ring_, scalar_mul(scalar(), o.scalar(), *ring_));
    return RingElement(poly() * o.poly());
}

RingElement RingElement::operator-() const {
    if (is_scalar()) return RingElement(ring_, scalar_neg(scalar(), *ring_));
    return RingElement(-poly());
}

bool RingElement::operator==(const RingElement& o) const {
    if (!ring_->equals(*o.ring_)) return false;
    if (is_scalar() != o.is_scalar()) return false;
    if (is_scalar()) return scalar_is_zero(scalar_sub(scalar(), o.scalar(), *ring_));
    return poly() == o.poly();
}

bool RingElement::is_unit() const {
    if (is_scalar()) return scalar_is_unit(scalar(), *ring_);
    // units of k[x...] and of quotient rings: constants that are units
    // (quotient units beyond constants are out of scope here)
    if (!poly().is_constant()) return false;
    if (poly().is_zero()) return false;
    return scalar_is_unit(poly().terms()[0].coeff, scalar_ring_of(ring_));
}

RingElement RingElement::invert() const {
    if (is_scalar()) return RingElement(ring_, scalar_invert(scalar(), *ring_));
    if (!is_unit()) throw PreconditionError("invert: non-unit element");
    Scalar c = scalar_invert(poly().terms()[0].coeff, scalar_ring_of(ring_));
    return RingElement(MultiPoly::constant(ring_, c));
}

bool RingElement::divide_exact(RingElement& out, const RingElement& by) const {
    require_same_ring(ring_, by.ring_, "divide_exact");
    if (is_scalar()) {
        Scalar s;
        if (!scalar_divide_exact(s, scalar(), by.scalar(), *ring_)) return false;
        out = RingElement(ring_, std::move(s));
        return true;
    }
    MultiPoly q(ring_);
    if (!poly_divide_exact(q, poly(), by.poly())) return false;
    out = RingElement(std::move(q));
    return true;
}

RingElement RingElement::divided_by_int(unsigned long n) const {
    if (n == 0) throw PreconditionError("divided_by_int: zero");
    if (!ring_->contains_rationals())
        throw PreconditionError("divided_by_int: ring does not contain the rationals");
    Rat inv(1, static_cast<unsigned long>(n));
    if (is_scalar()) return RingElement(ring_, Scalar(Rat(std::get<Rat>(scalar()) * inv)));
    return RingElement(poly().scaled(Scalar(inv)));
}

RingElement RingElement::map_to(const RingPtr& target,
                                const std::map<std::string, RingElement>& assignment) const {
    if (is_scalar()) {
        if (std::holds_alternative<Rat>(scalar())) return from_rat(target, std::get<Rat>(scalar()));
        return from_int(target, std::get<Int>(scalar()));
    }
    if (target->is_scalar_kind()) {
        // polynomial -> scalar target requires every variable to have a scalar image
        if (!poly().is_constant() && assignment.empty())
            throw PreconditionError("map_to: polynomial into scalar ring without assignment");
        // evaluate term by term
        RingElement acc = RingElement::zero(target);
        for (const auto& t : poly().terms()) {
            RingElement term = std::holds_alternative<Rat>(t.coeff)
                                   ? from_rat(target, std::get<Rat>(t.coeff))
                                   : from_int(target, std::get<Int>(t.coeff));
            for (size_t i = 0; i < t.exps.size(); ++i) {
                int e = t.exps[i];
                if (e == 0) continue;
                auto it = assignment.find(ring_->vars()[i]);
                if (it == assignment.end())
                    throw PreconditionError("map_to: no image for variable " + ring_->vars()[i]);
                if (e < 0) throw PreconditionError("map_to: negative exponent into scalar ring");
                for (int k = 0; k < e; ++k) term = term * it->second;
            }
            acc = acc + term;
        }
        return acc;
    }
    std::vector<std::optional<MultiPoly>> images(ring_->var_count());
    for (size_t i = 0; i < ring_->var_count(); ++i) {
        auto it = assignment.find(ring_->vars()[i]);
        if (it != assignment.end()) {
            if (it->second.is_scalar())
                images[i] = MultiPoly::constant(target, it->second.scalar());
            else
                images[i] = it->second.poly();
        }
    }
    return RingElement(poly().map_to(target, images));
}

std::string RingElement::to_string() const {
    if (is_scalar()) return scalar_to_string(scalar());
    return poly().to_string();
}

}  // namespace brauerkit
