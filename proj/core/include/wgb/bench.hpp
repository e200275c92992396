#pragma once

#include <string>
#include <vector>

#include "wgb/polynomial.hpp"

namespace wgb {

// One measured comparison: the weighted pipeline (F5 in the weighted
// grading, then FGLM on the weighted quotient) against the standard one
// (F5 on the unit-weight image, then FGLM on the image quotient, whose
// dimension carries the extra prod(w_j) factor).
struct BenchRow {
    std::string label;
    long long quotient_degree = 0;       // dim of the weighted quotient
    long long quotient_degree_std = 0;   // dim of the unit-weight quotient
    unsigned long long f5_ops_qh = 0;
    unsigned long long f5_ops_std = 0;
    unsigned long long fglm_ops_qh = 0;
    unsigned long long fglm_ops_std = 0;
    double f5_ms_qh = 0.0;
    double f5_ms_std = 0.0;
    double fglm_ms_qh = 0.0;
    double fglm_ms_std = 0.0;

    double f5_speedup() const;    // std ops / weighted ops
    double fglm_speedup() const;
};

// Runs both pipelines on a weighted homogeneous zero-dimensional system.
BenchRow run_bench(const PolySystem& F, const std::string& label);

// `system,deg_I,...` table, one data line per row.
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace wgb
