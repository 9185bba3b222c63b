#pragma once

#include "brauerkit/series.hpp"

namespace brauerkit {

struct ValidationError : Error {
    ValidationError(const std::string& ax, const std::string& mon)
        : Error("formal group law axiom violated: " + ax + " at monomial " + mon),
          axiom(ax),
          monomial(mon) {}
    std::string axiom;
    std::string monomial;
};

// A bivariate truncated series certified to satisfy unitality, commutativity
// and full three-variable associativity up to its truncation order.
class FormalGroupLaw {
public:
    static FormalGroupLaw validate(TruncSeries series);

    const TruncSeries& series() const { return series_; }
    int order() const { return series_.order(); }
    const RingPtr& coeff_ring() const { return series_.coeff_ring(); }
    // structural test: the stored series is exactly x + y
    bool is_additive() const;
    bool operator==(const FormalGroupLaw& o) const { return series_ == o.series_; }

private:
    explicit FormalGroupLaw(TruncSeries s) : series_(std::move(s)) {}
    TruncSeries series_;
};

struct HeightResult {
    enum class Kind { Finite, Infinite, IndeterminateAtOrder };
    Kind kind;
    int h = -1;                // when finite
    RingElement leading_unit;  // when finite
    int order = 0;             // the truncation order of the computation
    bool operator==(const HeightResult& o) const {
        if (kind != o.kind) return false;
        if (kind != Kind::Finite) return true;
        return h == o.h && leading_unit == o.leading_unit;
    }
    std::string to_string() const;
};

// unique L with L(0)=0, L'(0)=1 and L(G(x,y)) = L(x)+L(y), via the formal
// integral of the inverse of dG/dy(x,0); requires a ring containing Q
TruncSeries logarithm(const FormalGroupLaw& G);

// exp(L(x)+L(y)), validated
FormalGroupLaw fgl_from_log(const TruncSeries& L);

// the p-fold formal sum t +_G t +_G ... +_G t, by repeated substitution
TruncSeries p_series(const FormalGroupLaw& G, unsigned long p);

// retain only the t^(p^k) monomials (including the linear term)
TruncSeries p_typicalize_log(const TruncSeries& L, unsigned long p);

// univariate i with G(t, i(t)) = 0, by undetermined coefficients
TruncSeries formal_inverse(const FormalGroupLaw& G);

// smallest h with a nonzero t^(p^h) coefficient in [p]_G mod p; Infinite only
// for the structurally additive law; IndeterminateAtOrder when [p] vanishes
// identically up to the truncation order
HeightResult height_mod_p(const FormalGroupLaw& G, unsigned long p, int h_max);

// shared core on an already-reduced p-series over a field of characteristic p
HeightResult height_from_p_series(const TruncSeries& ps, unsigned long p, bool structurally_additive);

// coefficient-wise image in `target`, re-validated
FormalGroupLaw base_change(const FormalGroupLaw& G, const RingPtr& target,
                           const std::map<std::string, RingElement>& assignment = {});

}  // namespace brauerkit
