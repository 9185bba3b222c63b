#pragma once

#include "brauerkit/algebra.hpp"

namespace brauerkit {

// storage and rendering order: total degree ascending, grevlex-descending
// within a degree
struct SeriesKeyLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return grevlex_cmp(a, b) > 0;
    }
};
using SeriesTermMap = std::map<ExpVec, RingElement, SeriesKeyLess>;

// Multivariate power series in 1..3 series variables, truncated at a stated
// total degree N (terms of series-degree >= N are discarded). Coefficients
// live in an arbitrary Ring; degrees in a Laurent coefficient variable are
// exact data, never truncated.
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(RingPtr coeff_ring, std::vector<std::string> vars, int order);

    static TruncSeries zero(RingPtr coeff_ring, std::vector<std::string> vars, int order);
    // the series `c * v^e` for a named series variable
    static TruncSeries monomial(RingPtr coeff_ring, std::vector<std::string> vars, int order,
                                const std::string& var, int exp, RingElement c);

    const RingPtr& coeff_ring() const { return coeff_ring_; }
    const std::vector<std::string>& vars() const { return vars_; }
    size_t var_count() const { return vars_.size(); }
    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const SeriesTermMap& terms() const { return terms_; }

    RingElement coefficient(const ExpVec& e) const;
    RingElement coefficient(int e) const;          // univariate convenience
    RingElement coefficient(int i, int j) const;   // bivariate convenience
    void set_coefficient(const ExpVec& e, RingElement c);
    int min_degree() const;  // smallest total series-degree with a term; order() if zero

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator-() const;
    bool operator==(const TruncSeries& o) const;
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    TruncSeries scaled(const RingElement& c) const;
    TruncSeries truncated(int new_order) const;  // new_order <= order
    // substitute 0 for one series variable and drop it
    TruncSeries at_zero(size_t var) const;
    // rename/permute series variables (same count)
    TruncSeries with_vars(std::vector<std::string> new_vars,
                          const std::vector<size_t>& source_of) const;
    // promote into a larger variable set: old var i becomes new var embed[i]
    TruncSeries embedded(std::vector<std::string> new_vars, const std::vector<size_t>& embed) const;
    TruncSeries derivative(size_t var) const;
    // termwise antiderivative in a univariate series (needs division by integers)
    TruncSeries antiderivative() const;
    // map coefficients into another ring
    TruncSeries map_coefficients(const RingPtr& target,
                                 const std::map<std::string, RingElement>& assignment = {}) const;

    std::string to_string() const;  // canonical: degree-ascending, grevlex within

private:
    RingPtr coeff_ring_;
    std::vector<std::string> vars_;
    int order_ = 0;
    SeriesTermMap terms_;
    void insert(const ExpVec& e, RingElement c);
    friend TruncSeries series_mul(const TruncSeries&, const TruncSeries&);
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_pow(const TruncSeries& a, unsigned e);

// f(args): f in k vars, args.size() == k, every argument with zero constant
// term and matching ring/vars/order
TruncSeries series_substitute(const TruncSeries& f, const std::vector<TruncSeries>& args);

// inverse of a series with unit constant term
TruncSeries series_invert_unit(const TruncSeries& a);

// compositional inverse of a univariate series with f(0)=0 and unit f'(0),
// by degree-by-degree undetermined coefficients
TruncSeries series_reversion(const TruncSeries& f);

// q with q*den = num up to O(N); unit-constant dens by inversion, otherwise
// graded long division verified by back-multiplication
TruncSeries series_exact_divide(const TruncSeries& num, const TruncSeries& den);

}  // namespace brauerkit
