#include "brauerkit/series.hpp"

#include <algorithm>
#include <sstream>

namespace brauerkit {

TruncSeries::TruncSeries(RingPtr coeff_ring, std::vector<std::string> vars, int order)
    : coeff_ring_(std::move(coeff_ring)), vars_(std::move(vars)), order_(order) {
    if (vars_.empty() || vars_.size() > 3)
        throw PreconditionError("TruncSeries: 1..3 series variables");
    if (order_ < 1) throw PreconditionError("TruncSeries: order must be >= 1");
}

TruncSeries TruncSeries::zero(RingPtr coeff_ring, std::vector<std::string> vars, int order) {
    return TruncSeries(std::move(coeff_ring), std::move(vars), order);
}

TruncSeries TruncSeries::monomial(RingPtr coeff_ring, std::vector<std::string> vars, int order,
                                  const std::string& var, int exp, RingElement c) {
    TruncSeries s(std::move(coeff_ring), std::move(vars), order);
    auto it = std::find(s.vars_.begin(), s.vars_.end(), var);
    if (it == s.vars_.end()) throw PreconditionError("TruncSeries::monomial: unknown variable");
    if (exp < 0) throw PreconditionError("TruncSeries::monomial: negative exponent");
    ExpVec e(s.vars_.size());
    e.set(static_cast<size_t>(it - s.vars_.begin()), exp);
    s.insert(e, std::move(c));
    return s;
}

void TruncSeries::insert(const ExpVec& e, RingElement c) {
    if (e.total_degree() >= order_ || c.is_zero()) return;
    require_same_ring(c.ring(), coeff_ring_, "TruncSeries");
    terms_[e] = std::move(c);
}

RingElement TruncSeries::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    if (it != terms_.end()) return it->second;
    return RingElement::zero(coeff_ring_);
}

RingElement TruncSeries::coefficient(int e) const {
    if (vars_.size() != 1) throw PreconditionError("coefficient(int): not univariate");
    ExpVec v(1);
    v.set(0, e);
    return coefficient(v);
}

RingElement TruncSeries::coefficient(int i, int j) const {
    if (vars_.size() != 2) throw PreconditionError("coefficient(int,int): not bivariate");
    ExpVec v(2);
    v.set(0, i);
    v.set(1, j);
    return coefficient(v);
}

void TruncSeries::set_coefficient(const ExpVec& e, RingElement c) {
    if (e.total_degree() >= order_) return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

int TruncSeries::min_degree() const {
    if (terms_.empty()) return order_;
    return terms_.begin()->first.total_degree();
}

static void check_compatible(const TruncSeries& a, const TruncSeries& b, const char* where) {
    require_same_ring(a.coeff_ring(), b.coeff_ring(), where);
    if (a.vars() != b.vars() || a.order() != b.order())
        throw RingMismatchError(std::string(where) + ": series vars/order mismatch");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    check_compatible(*this, o, "series add");
    TruncSeries r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end())
            r.terms_[e] = c;
        else {
            RingElement s = it->second + c;
            if (s.is_zero())
                r.terms_.erase(it);
            else
                it->second = std::move(s);
        }
    }
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

bool TruncSeries::operator==(const TruncSeries& o) const {
    if (vars_ != o.vars_ || order_ != o.order_ || terms_.size() != o.terms_.size()) return false;
    if (!coeff_ring_->equals(*o.coeff_ring_)) return false;
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
    }
    return true;
}

TruncSeries TruncSeries::scaled(const RingElement& c) const {
    TruncSeries r(coeff_ring_, vars_, order_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) {
        RingElement s = v * c;
        if (!s.is_zero()) r.terms_[e] = std::move(s);
    }
    return r;
}

TruncSeries TruncSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw PreconditionError("truncated: cannot raise the order");
    TruncSeries r(coeff_ring_, vars_, new_order);
    for (const auto& [e, v] : terms_)
        if (e.total_degree() < new_order) r.terms_[e] = v;
    return r;
}

TruncSeries TruncSeries::at_zero(size_t var) const {
    if (vars_.size() < 2) throw PreconditionError("at_zero: would leave no variables");
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (i != var) nv.push_back(vars_[i]);
    TruncSeries r(coeff_ring_, nv, order_);
    for (const auto& [e, v] : terms_) {
        if (e[var] != 0) continue;
        ExpVec ne(nv.size());
        size_t j = 0;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (i != var) ne.set(j++, e[i]);
        r.terms_[ne] = v;
    }
    return r;
}

TruncSeries TruncSeries::with_vars(std::vector<std::string> new_vars,
                                   const std::vector<size_t>& source_of) const {
    if (new_vars.size() != vars_.size() || source_of.size() != vars_.size())
        throw PreconditionError("with_vars: arity mismatch");
    TruncSeries r(coeff_ring_, std::move(new_vars), order_);
    for (const auto& [e, v] : terms_) {
        ExpVec ne(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) ne.set(i, e[source_of[i]]);
        r.terms_[ne] = v;
    }
    return r;
}

TruncSeries TruncSeries::embedded(std::vector<std::string> new_vars,
                                  const std::vector<size_t>& embed) const {
    TruncSeries r(coeff_ring_, std::move(new_vars), order_);
    for (const auto& [e, v] : terms_) {
        ExpVec ne(r.vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) ne.set(embed[i], e[i]);
        r.terms_[ne] = v;
    }
    return r;
}

TruncSeries TruncSeries::derivative(size_t var) const {
    TruncSeries r(coeff_ring_, vars_, order_);
    for (const auto& [e, v] : terms_) {
        int k = e[var];
        if (k == 0) continue;
        ExpVec ne = e;
        ne.set(var, k - 1);
        RingElement c = v * RingElement::from_int(coeff_ring_, Int(k));
        if (!c.is_zero()) r.terms_[ne] = std::move(c);
    }
    return r;
}

TruncSeries TruncSeries::antiderivative() const {
    if (vars_.size() != 1) throw PreconditionError("antiderivative: univariate only");
    TruncSeries r(coeff_ring_, vars_, order_);
    for (const auto& [e, v] : terms_) {
        int k = e[0] + 1;
        if (k >= order_) continue;
        ExpVec ne(1);
        ne.set(0, k);
        r.terms_[ne] = v.divided_by_int(static_cast<unsigned long>(k));
    }
    return r;
}

TruncSeries TruncSeries::map_coefficients(const RingPtr& target,
                                          const std::map<std::string, RingElement>& assignment) const {
    TruncSeries r(target, vars_, order_);
    for (const auto& [e, v] : terms_) {
        RingElement c = v.map_to(target, assignment);
        if (!c.is_zero()) r.terms_[e] = std::move(c);
    }
    return r;
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    check_compatible(a, b, "series mul");
    const int N = a.order();
    TruncSeries r(a.coeff_ring(), a.vars(), N);
    for (const auto& [ea, ca] : a.terms()) {
        int da = ea.total_degree();
        for (const auto& [eb, cb] : b.terms()) {
            if (da + eb.total_degree() >= N) break;  // keys ordered by degree
            ExpVec e = ea.plus(eb);
            RingElement prod = ca * cb;
            if (prod.is_zero()) continue;
            auto it = r.terms_.find(e);
            if (it == r.terms_.end())
                r.terms_[e] = std::move(prod);
            else {
                RingElement s = it->second + prod;
                if (s.is_zero())
                    r.terms_.erase(it);
                else
                    it->second = std::move(s);
            }
        }
    }
    return r;
}

TruncSeries series_pow(const TruncSeries& a, unsigned e) {
    TruncSeries acc = TruncSeries::zero(a.coeff_ring(), a.vars(), a.order());
    ExpVec z(a.vars().size());
    acc.set_coefficient(z, RingElement::one(a.coeff_ring()));
    TruncSeries base = a;
    while (e) {
        if (e & 1) acc = series_mul(acc, base);
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return acc;
}

TruncSeries series_substitute(const TruncSeries& f, const std::vector<TruncSeries>& args) {
    if (args.size() != f.var_count())
        throw PreconditionError("series_substitute: argument count mismatch");
    for (const auto& a : args) {
        if (a.order() != f.order())
            throw PreconditionError("series_substitute: order mismatch");
        ExpVec z(a.vars().size());
        if (!a.coefficient(z).is_zero())
            throw PreconditionError("series_substitute: argument has nonzero constant term");
    }
    const TruncSeries& proto = args[0];
    const int N = f.order();
    // powers of each argument, pruned by minimal degree
    std::vector<std::vector<TruncSeries>> pows(args.size());
    for (size_t k = 0; k < args.size(); ++k) {
        int mind = std::max(1, args[k].min_degree());
        int maxe = args[k].is_zero() ? 0 : (N - 1) / mind;
        pows[k].push_back(series_pow(args[k], 0));  // = 1
        for (int e = 1; e <= maxe; ++e) {
            pows[k].push_back(series_mul(pows[k].back(), args[k]));
            if (pows[k].back().is_zero()) break;
        }
    }
    TruncSeries r = TruncSeries::zero(proto.coeff_ring(), proto.vars(), N);
    for (const auto& [e, c] : f.terms()) {
        if (e.is_zero())
            throw PreconditionError("series_substitute: constant term in substituted series");
        TruncSeries term = TruncSeries::zero(proto.coeff_ring(), proto.vars(), N);
        bool dead = false;
        bool started = false;
        for (size_t k = 0; k < args.size() && !dead; ++k) {
            int ek = e[k];
            if (ek == 0) continue;
            if (ek >= static_cast<int>(pows[k].size()) || pows[k][static_cast<size_t>(ek)].is_zero()) {
                dead = true;
                break;
            }
            const TruncSeries& pw = pows[k][static_cast<size_t>(ek)];
            term = started ? series_mul(term, pw) : pw;
            started = true;
        }
        if (dead || !started) continue;
        r = r + term.scaled(c);
    }
    return r;
}

TruncSeries series_invert_unit(const TruncSeries& a) {
    ExpVec z(a.vars().size());
    RingElement c0 = a.coefficient(z);
    if (!c0.is_unit()) throw PreconditionError("series_invert_unit: constant term is not a unit");
    RingElement c0inv = c0.invert();
    // 1/a = c0inv * 1/(1 + h), h = c0inv*a - 1, by geometric series
    TruncSeries h = a.scaled(c0inv);
    h.set_coefficient(z, RingElement::zero(a.coeff_ring()));
    TruncSeries inv = TruncSeries::zero(a.coeff_ring(), a.vars(), a.order());
    inv.set_coefficient(z, RingElement::one(a.coeff_ring()));
    TruncSeries term = inv;
    while (true) {
        term = -series_mul(term, h);
        if (term.is_zero()) break;
        inv = inv + term;
    }
    return inv.scaled(c0inv);
}

TruncSeries series_reversion(const TruncSeries& f) {
    if (f.var_count() != 1) throw PreconditionError("series_reversion: univariate only");
    ExpVec z(1);
    if (!f.coefficient(z).is_zero())
        throw PreconditionError("series_reversion: f(0) != 0");
    RingElement l1 = f.coefficient(1);
    if (!l1.is_unit())
        throw PreconditionError("series_reversion: linear coefficient is not a unit");
    const int N = f.order();
    const RingPtr& R = f.coeff_ring();
    RingElement l1inv = l1.invert();
    // precompute powers of f once; e_n then solves coeff_n( sum e_k f^k ) = [n==1]
    std::vector<TruncSeries> pows;
    pows.push_back(f);  // f^1
    for (int k = 2; k < N; ++k) pows.push_back(series_mul(pows.back(), f));
    std::vector<RingElement> e(static_cast<size_t>(N), RingElement::zero(R));
    std::vector<RingElement> l1invpow(static_cast<size_t>(N), RingElement::one(R));
    for (int k = 1; k < N; ++k) l1invpow[static_cast<size_t>(k)] = l1invpow[static_cast<size_t>(k - 1)] * l1inv;
    e[1] = l1inv;
    for (int n = 2; n < N; ++n) {
        RingElement acc = RingElement::zero(R);
        for (int k = 1; k < n; ++k) {
            if (e[static_cast<size_t>(k)].is_zero()) continue;
            acc = acc + e[static_cast<size_t>(k)] * pows[static_cast<size_t>(k - 1)].coefficient(n);
        }
        e[static_cast<size_t>(n)] = (-acc) * l1invpow[static_cast<size_t>(n)];
    }
    TruncSeries g = TruncSeries::zero(R, f.vars(), N);
    for (int n = 1; n < N; ++n) {
        ExpVec k(1);
        k.set(0, n);
        g.set_coefficient(k, e[static_cast<size_t>(n)]);
    }
    return g;
}

TruncSeries series_exact_divide(const TruncSeries& num, const TruncSeries& den) {
    check_compatible(num, den, "series_exact_divide");
    if (den.is_zero()) throw InexactDivisionError("series_exact_divide: zero divisor");
    ExpVec z(num.vars().size());
    RingElement c0 = den.coefficient(z);
    if (!c0.is_zero() && c0.is_unit()) return series_mul(num, series_invert_unit(den));
    // graded long division by the least term of den (degree, then grevlex-max,
    // so quotients by later den terms move strictly up in the key order)
    const auto& dlead = *den.terms().begin();
    TruncSeries rem = num;
    TruncSeries q = TruncSeries::zero(num.coeff_ring(), num.vars(), num.order());
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        if (!dlead.first.divides(rlead.first))
            throw InexactDivisionError("series_exact_divide: monomial not divisible");
        RingElement c;
        if (!rlead.second.divide_exact(c, dlead.second))
            throw InexactDivisionError("series_exact_divide: coefficient not divisible");
        ExpVec e = rlead.first.minus(dlead.first);
        TruncSeries qt = TruncSeries::zero(num.coeff_ring(), num.vars(), num.order());
        qt.set_coefficient(e, c);
        q = q + qt;
        rem = rem - series_mul(qt, den);
    }
    // the division is graded-truncated; verify by back-multiplication
    if (series_mul(q, den) != num)
        throw InexactDivisionError("series_exact_divide: inexact (back-multiplication failed)");
    return q;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        bool composite = cs.find(' ') != std::string::npos;
        if (neg && !composite) cs = cs.substr(1);
        if (first) {
            if (neg && !composite) os << "-";
            first = false;
        } else {
            os << ((neg && !composite) ? " - " : " + ");
        }
        bool any_var = !e.is_zero();
        bool unit = !composite && cs == "1";
        if (composite && any_var)
            os << "(" << c.to_string() << ")";
        else if (!unit || !any_var)
            os << cs;
        bool need_star = (composite || !unit) && any_var;
        for (size_t i = 0; i < vars_.size(); ++i) {
            int k = e[i];
            if (k == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (k != 1) os << "^" << k;
            need_star = true;
        }
    }
    if (first) os << "0";
    os << " + O(" << order_ << ")";
    return os.str();
}

}  // namespace brauerkit
