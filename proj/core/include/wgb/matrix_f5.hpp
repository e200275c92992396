#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wgb/polynomial.hpp"

namespace wgb {

// Reduced truncated basis plus the run counters that describe how it was
// obtained.
struct GroebnerBasis {
    Order order = Order::WGrevlex;
    std::vector<Polynomial> polys;  // interreduced, ascending leading monomial
    long long truncation_wdeg = 0;
    bool zero_dimensional = false;
    // Standard monomials (ascending W-grevlex); filled only when the leading
    // terms contain a pure power of every variable, which certifies the
    // quotient is finite-dimensional.
    std::vector<Monomial> staircase;
    unsigned long long reductions_to_zero = 0;
    // Highest W-degree at which a new basis element appeared; -1 if none.
    long long observed_dreg = -1;
};

// Per-degree instrumentation of one run.
struct DegreeStats {
    long long wdeg = 0;
    std::size_t rows = 0;      // rows assembled, zero rows included
    std::size_t cols = 0;      // monomials of this W-degree
    std::size_t rejected = 0;  // labels removed by the signature criterion
    unsigned long long ops = 0;  // field multiply-accumulates executed
    std::size_t new_basis = 0;
    std::size_t zero_reductions = 0;
    std::size_t degree_falls = 0;
};

struct F5Options {
    // Truncation degree; negative means sum(d_i - w_i) + max w, the degree
    // that completes every regular zero-dimensional run.
    long long d_max = -1;
    // Disables the signature criterion (every label is kept).  The rejected
    // counter of a criterion run on a regular sequence equals the
    // zero-reduction counter of the criterion-free run.
    bool use_criterion = true;
    // Index of the homogenization variable, if any: new basis elements whose
    // leading monomial it divides are counted as degree falls.
    int homog_var = -1;
};

struct F5Result {
    GroebnerBasis basis;
    unsigned long long ops = 0;
    unsigned long long rejected = 0;
    unsigned long long degree_falls = 0;
    std::vector<DegreeStats> degrees;
};

// Degree-by-degree signature Gaussian elimination on Macaulay matrices,
// producing the W-grevlex basis truncated at d_max.  Requires weighted
// homogeneous input.
F5Result matrix_f5(const PolySystem& F, const F5Options& opts = {});

// Runs matrix_f5 on the unit-weight image of F and maps the basis back.
// The basis equals the direct run's; counters and degree stats describe the
// unit-weight run (its columns count total-degree monomials).
F5Result matrix_f5_hom(const PolySystem& F, const F5Options& opts = {});

// One `degree,rows,cols,ops,new_polys` line per active degree.
std::string degree_csv(const F5Result& result);

// Fills zero_dimensional and staircase from the basis leading terms.  The
// staircase is enumerated only when a pure power of every variable leads
// some element, the certificate that the quotient is finite-dimensional.
void compute_staircase(GroebnerBasis& g, const WeightSystem& W);

}  // namespace wgb
