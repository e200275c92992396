#pragma once

#include <vector>

#include "wgb/bigint.hpp"
#include "wgb/weights.hpp"

namespace wgb {

// Truncated power series (or exact polynomial) in one variable t with
// integer coefficients.  coeffs[d] is the coefficient of t^d.
struct HilbertSeries {
    std::vector<Int> coeffs;
    bool exact_polynomial = false;

    Int coeff(long long d) const {
        if (d < 0 || d >= static_cast<long long>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(d)];
    }
    Int value_at_one() const {
        Int s = 0;
        for (const Int& c : coeffs) s += c;
        return s;
    }
};

// Series prod_i (1 - t^{d_i}) / prod_j (1 - t^{w_j}) up to `truncation`.
// When the denominator divides the numerator exactly (in particular for
// regular zero-dimensional configurations) the full quotient polynomial is
// returned, exact_polynomial is set, and the coefficient vector covers
// max(truncation, polynomial degree).
HilbertSeries series_regular(const WeightSystem& W,
                             const std::vector<long long>& wdegrees,
                             long long truncation);

// Series z^{d_i} * prod_{k<i} (1 - z^{d_k}) / (1 - z^{w_k}) up to
// `truncation`, i is 1-based.  Coefficient b_{d,i} bounds the number of new
// basis leading terms of weighted degree d contributed by generator i; the
// coefficient sum equals the (i-1)-st partial degree when the division is
// exact.
HilbertSeries b_series(const WeightSystem& W,
                       const std::vector<long long>& wdegrees, int i,
                       long long truncation);

// Predictions derived from the weights and declared degrees alone.
// For m < n all formulas use indices 1..m only; the regularity bound's max
// still ranges over all n weights (the extended sequence appends the
// remaining variables).
struct SystemProfile {
    int n = 0;
    int m = 0;
    WeightSystem W{std::vector<int>{1}};
    std::vector<long long> wdegrees;
    long long i_reg = 0;        // sum(d_i - w_i)
    long long dreg_bound = 0;   // i_reg + max weight
    Rat degree;                 // prod d_i / w_i, exact
    bool degree_integral = false;
    std::vector<Rat> partial_degrees;   // D_i = prod_{j<=i} d_j/w_j, 1-based
    std::vector<Int> homogenized_degrees;  // D~_i = prod_{j<=i} d_j, 1-based
};

SystemProfile profile(const WeightSystem& W,
                      const std::vector<long long>& wdegrees);

// Operation-count estimates with all O(1) constants set to 1.  Estimates
// whose exact value is rational (the delta/P and 1/(P_{i+1}P_n) factors,
// and non-integral ideal degrees) are reported as the ceiling of the exact
// rational; with integral omega every value is exact.
struct BoundReport {
    double omega = 3.0;
    Int c_fglm;         // n * degree^3
    Int c_f5_basic;     // dreg_bound * M_{dreg_bound,W}(n)^omega
    Int c_f5_binomial;  // dreg_bound * [count-bound upper at dreg_bound]^omega
    Int c_f5_refined;   // sum over i of (D_{i-1}-D_{i-2}) M(i) M(n), D_0 = 0
    Int c_f5_hom;       // the refined sum evaluated on the embedded system
    Int c_f5_bdi;       // the b-series refinement, truncated at dreg_bound
};

BoundReport bounds(const SystemProfile& prof, double omega = 3.0);

}  // namespace wgb
