#pragma once

#include "brauerkit/artin.hpp"
#include "brauerkit/groebner.hpp"
#include "brauerkit/stienstra.hpp"

namespace brauerkit {

// v_0 = p held symbolically; v[k] is v_{k+1}, an element of the mod-p base
// (GF(p) or GF(p)[params]), reproducible as the t^(p^(k+1)) coefficient of
// the source law's p-series.
struct VSequence {
    unsigned long p = 0;
    RingPtr base;                   // GF(p) or GF(p)[params]
    std::vector<RingElement> v;     // v_1 .. v_h
    std::vector<std::string> notes; // extraction route records

    const RingElement& v_n(int n) const;  // n >= 1
    std::string to_string() const;
};

struct ExactnessVerdict {
    enum class Kind { ExactAtP, FailsAt, Inconclusive };
    unsigned long p = 0;
    Kind kind = Kind::Inconclusive;
    int fails_at = -1;
    int regular_up_to = 0;          // highest n whose step was verified
    std::optional<int> unit_at;     // smallest h with (p, v_1..v_h) = (1)
    std::vector<std::string> steps; // one line per verified step
    std::string to_string() const;
};

// v_n from the t^(p^n) coefficients of p_series(G, p); G over a char-p ring
VSequence extract_v(const FormalGroupLaw& G, unsigned long p, int h_max);

// v_n from the univariate identity [p] = exp_G(p log_G t), the log over
// QQ[params]; p-integrality of every coefficient is checked before reduction.
// With `typical`, the log is p-typicalized first (the two routes agree on the
// instances in scope; see the cross-route tests).
VSequence extract_v_from_log(const TruncSeries& log, unsigned long p, int h_max,
                             bool typical = false);

// ... and the reduced p-series itself (for height work at large order)
TruncSeries p_series_from_log(const TruncSeries& log, unsigned long p, bool typical = false);

// regular-sequence checks over GF(p)[params] (or the prime-field case):
// step 0 is recorded structurally (the ZZ-flat base is torsion-free); steps
// n >= 1 run is_zero_divisor(v_n, (v_1..v_{n-1})); a unit ideal collapses the
// quotient and trivializes the remaining steps.
ExactnessVerdict regularity_check(const VSequence& V);

// residue-only certificate: if (v_1..v_{h-1}) is zero-dimensional and local
// at the origin and v_h has a nonzero constant residue there, v_h is a unit
// modulo the prior ideal, hence a non-zero-divisor
bool nonzerodivisor_by_locality(const RingElement& residue_at_origin, const Ideal& prior);

// Jacobian criterion at a point of V(fs): the point must satisfy fs = 0; the
// Jacobian must have rank fs.size() there (for a hypersurface: some partial
// derivative nonzero). Coordinates live in GF(p) or an extension built as a
// quotient ring.
bool smooth_at_point(const std::vector<MultiPoly>& fs, const std::vector<RingElement>& point);

// GF(p^2) as GF(p)[w]/(irreducible quadratic), deterministic choice
RingPtr quadratic_extension(unsigned long p);

struct SmoothWitness {
    std::string locus;        // rendered ideal, e.g. "(3, v1)"
    bool locus_point_found = false;
    std::string base_point;   // parameter values on the locus
    bool smooth_point_found = false;
    std::string surface_point;
    std::string field;        // "GF(p)" or "GF(p^2)"
};

struct ExactnessReport {
    unsigned long p = 0;
    int hmax = 0;
    int order = 0;
    std::string surface;
    std::string route;  // "stienstra" or "artin"
    VSequence vs;
    ExactnessVerdict verdict;
    std::vector<SmoothWitness> smooth;
    std::vector<std::string> certificates;  // non-computational certificates, one line each
    std::string coefficient_ring_note;      // plain-text topological shape
    // elliptic families: the residue of v_{hmax} at the parameter origin
    std::optional<RingElement> top_v_residue_at_origin;
    std::string to_string() const;
};

ExactnessReport exactness_report(const CompleteIntersectionK3& X, unsigned long p, int h_max);
ExactnessReport exactness_report(const DoublePlaneK3& X, unsigned long p, int h_max);
ExactnessReport exactness_report(const WeierstrassModel& W, unsigned long p, int h_max);

}  // namespace brauerkit
