#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace brauerkit {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// errors

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RingMismatchError : Error {
    using Error::Error;
};
struct PreconditionError : Error {
    using Error::Error;
};
struct InexactDivisionError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// exponent vectors

constexpr int kMaxVars = 8;

// Exponent vector of a monomial. Fixed small capacity; exponents may be
// negative only in a ring's designated Laurent variable.
class ExpVec {
public:
    ExpVec() = default;
    explicit ExpVec(size_t n) : n_(static_cast<uint8_t>(n)) {
        if (n > kMaxVars) throw Error("ExpVec: too many variables");
    }
    static ExpVec unit(size_t n, size_t i, int e = 1) {
        ExpVec v(n);
        v.set(i, e);
        return v;
    }

    size_t size() const { return n_; }
    int operator[](size_t i) const { return e_[i]; }
    void set(size_t i, int e) {
        if (e < INT16_MIN || e > INT16_MAX) throw Error("ExpVec: exponent out of range");
        e_[i] = static_cast<int16_t>(e);
    }
    int total_degree() const {
        int d = 0;
        for (size_t i = 0; i < n_; ++i) d += e_[i];
        return d;
    }
    bool is_zero() const {
        for (size_t i = 0; i < n_; ++i)
            if (e_[i]) return false;
        return true;
    }
    ExpVec plus(const ExpVec& o) const {
        ExpVec r(n_);
        for (size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<int16_t>(e_[i] + o.e_[i]);
        return r;
    }
    // componentwise difference; caller checks divisibility where it matters
    ExpVec minus(const ExpVec& o) const {
        ExpVec r(n_);
        for (size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<int16_t>(e_[i] - o.e_[i]);
        return r;
    }
    bool divides(const ExpVec& o) const {
        for (size_t i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }
    ExpVec lcm(const ExpVec& o) const {
        ExpVec r(n_);
        for (size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }
    bool operator==(const ExpVec& o) const {
        if (n_ != o.n_) return false;
        for (size_t i = 0; i < n_; ++i)
            if (e_[i] != o.e_[i]) return false;
        return true;
    }
    bool operator!=(const ExpVec& o) const { return !(*this == o); }


private:
    std::array<int16_t, kMaxVars> e_{};
    uint8_t n_ = 0;
};

// graded reverse-lexicographic: higher total degree first; within a degree,
// the monomial with the SMALLER exponent on the last differing variable wins.
inline int grevlex_cmp(const ExpVec& a, const ExpVec& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

// elimination block order: exponent of the tag variable (given index)
// dominates, grevlex on the rest. Used by the ideal-quotient construction.
inline int elim_cmp(const ExpVec& a, const ExpVec& b, size_t tag) {
    if (a[tag] != b[tag]) return a[tag] < b[tag] ? -1 : 1;
    int da = a.total_degree() - a[tag], db = b.total_degree() - b[tag];
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (i == tag) continue;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct MonomialOrder {
    // tag < 0: plain grevlex; otherwise elimination order for variable `tag`
    int tag = -1;
    int cmp(const ExpVec& a, const ExpVec& b) const {
        return tag < 0 ? grevlex_cmp(a, b) : elim_cmp(a, b, static_cast<size_t>(tag));
    }
    bool less(const ExpVec& a, const ExpVec& b) const { return cmp(a, b) < 0; }
};

// ---------------------------------------------------------------------------
// rings

enum class RingKind { Integers, Rationals, IntegersMod, PrimeField, Poly, Quotient };

class Ring;
class MultiPoly;
class RingElement;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
public:
    static RingPtr integers();
    static RingPtr rationals();
    static RingPtr integers_mod(const Int& m);
    static RingPtr prime_field(unsigned long p);  // primality by trial division
    // base must be one of the four scalar kinds; laurent_var designates the
    // single variable allowed to carry negative exponents (or -1 for none)
    static RingPtr poly(RingPtr base, std::vector<std::string> vars, int laurent_var = -1);
    // base must be a Poly ring over a PrimeField; gens generate the ideal.
    // The reduced Groebner basis is computed eagerly and cached (write-once).
    static RingPtr quotient(RingPtr poly_ring, std::vector<MultiPoly> gens);

    RingKind kind() const { return kind_; }
    bool is_scalar_kind() const { return kind_ != RingKind::Poly && kind_ != RingKind::Quotient; }
    const Int& modulus() const { return modulus_; }
    // Quotient: the Poly ring carrying the representatives
    RingPtr poly_ring() const;
    const RingPtr& base() const { return base_; }
    const std::vector<std::string>& vars() const;
    size_t var_count() const { return vars().size(); }
    int laurent_var() const;
    int var_index(const std::string& name) const;  // -1 if absent
    bool contains_rationals() const;
    bool is_char_p(unsigned long p) const;
    const std::vector<MultiPoly>& quotient_basis() const;  // reduced GB
    bool equals(const Ring& o) const;
    std::string describe() const;

private:
    Ring() = default;
    RingKind kind_{};
    Int modulus_;
    RingPtr base_;
    std::vector<std::string> vars_;
    int laurent_var_ = -1;
    std::shared_ptr<std::vector<MultiPoly>> quot_basis_;
    friend RingPtr detail_make_quotient(RingPtr, std::vector<MultiPoly>);
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where) {
    if (a.get() != b.get() && !a->equals(*b))
        throw RingMismatchError(std::string(where) + ": ring mismatch");
}

// ---------------------------------------------------------------------------
// scalars (elements of the four scalar ring kinds)

using Scalar = std::variant<Int, Rat>;

bool scalar_is_zero(const Scalar& a);
Scalar scalar_add(const Scalar& a, const Scalar& b, const Ring& ring);
Scalar scalar_sub(const Scalar& a, const Scalar& b, const Ring& ring);
Scalar scalar_mul(const Scalar& a, const Scalar& b, const Ring& ring);
Scalar scalar_neg(const Scalar& a, const Ring& ring);
Scalar scalar_from_int(const Int& n, const Ring& ring);
Scalar scalar_from_rat(const Rat& q, const Ring& ring);  // throws if denominator not invertible
bool scalar_is_unit(const Scalar& a, const Ring& ring);
Scalar scalar_invert(const Scalar& a, const Ring& ring);           // throws on non-unit
bool scalar_divide_exact(Scalar& out, const Scalar& a, const Scalar& b, const Ring& ring);
std::string scalar_to_string(const Scalar& a);

// ---------------------------------------------------------------------------
// sparse multivariate polynomials

struct Term {
    ExpVec exps;
    Scalar coeff;
};

// Canonical sparse polynomial over a Poly or Quotient ring: terms sorted
// grevlex-descending, no zero coefficients; Quotient elements are kept in
// normal form w.r.t. the ring's cached basis.
class MultiPoly {
public:
    MultiPoly() = default;
    explicit MultiPoly(RingPtr ring);  // zero
    static MultiPoly constant(RingPtr ring, const Scalar& c);
    static MultiPoly constant(RingPtr ring, long c);
    static MultiPoly variable(RingPtr ring, size_t var_index, int exp = 1);
    static MultiPoly monomial(RingPtr ring, const ExpVec& e, const Scalar& c);
    // terms need not be sorted or combined; canonicalized here
    static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].exps.is_zero());
    }
    size_t var_count() const { return ring_->var_count(); }
    int total_degree() const;                 // -1 for zero
    int degree_in(size_t var) const;          // max exponent; INT_MIN-ish for zero
    int valuation_in(size_t var) const;       // min exponent; 0 for zero by convention
    const Term& leading_term() const;         // grevlex-largest
    Scalar coefficient_of(const ExpVec& e) const;     // zero scalar if absent
    // collect the coefficient of a fixed exponent pattern on a subset of
    // variables, as a polynomial in a target ring over the remaining ones
    MultiPoly coefficient_poly(const std::vector<size_t>& fixed_vars,
                               const std::vector<int>& fixed_exps, const RingPtr& target) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const Scalar& c) const;
    MultiPoly shifted(size_t var, int delta) const;  // multiply by var^delta (Laurent-aware)
    MultiPoly pow(unsigned e) const;
    // map into `target`: variables via `assignment` (aligned with this ring's
    // vars; empty entries map a variable to the same-named variable of target),
    // scalars via the natural map. Throws on non-invertible denominators.
    MultiPoly map_to(const RingPtr& target, const std::vector<std::optional<MultiPoly>>& assignment) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void canonicalize();
    friend MultiPoly mul_capped(const MultiPoly&, const MultiPoly&, const std::vector<int>&);
    friend MultiPoly poly_normal_form(const MultiPoly&, const std::vector<MultiPoly>&, const MonomialOrder&);
};

// product with per-variable exponent caps (cap < 0 means unbounded): any
// product term exceeding a cap is dropped. Used by the Stienstra expansion.
MultiPoly mul_capped(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& caps);

// exact polynomial division; returns false if not exactly divisible
bool poly_divide_exact(MultiPoly& quotient, const MultiPoly& num, const MultiPoly& den);

// derivative w.r.t. one variable
MultiPoly poly_derivative(const MultiPoly& p, size_t var);

// evaluate at a point (coordinates in the scalar ring of p's ring)
Scalar poly_eval(const MultiPoly& p, const std::vector<Scalar>& point);

// ---------------------------------------------------------------------------
// ring elements (element of any ring in the tower)

class RingElement {
public:
    RingElement() = default;
    RingElement(RingPtr ring, Scalar s);
    explicit RingElement(MultiPoly p);
    static RingElement zero(RingPtr ring);
    static RingElement one(RingPtr ring);
    static RingElement from_int(RingPtr ring, const Int& n);
    static RingElement from_rat(RingPtr ring, const Rat& q);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_scalar() const { return std::holds_alternative<Scalar>(v_); }
    const Scalar& scalar() const { return std::get<Scalar>(v_); }
    const MultiPoly& poly() const { return std::get<MultiPoly>(v_); }

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    bool operator==(const RingElement& o) const;
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    bool is_unit() const;
    RingElement invert() const;  // throws on non-unit
    bool divide_exact(RingElement& out, const RingElement& by) const;
    // divide by a positive machine integer (rings containing Q only)
    RingElement divided_by_int(unsigned long n) const;
    // image in `target` (scalars naturally; poly variables by name unless
    // assignment provides images). Throws on unmappable coefficients.
    RingElement map_to(const RingPtr& target,
                       const std::map<std::string, RingElement>& assignment = {}) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::variant<Scalar, MultiPoly> v_;
};

}  // namespace brauerkit
