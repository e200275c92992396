#include "wgb/bench.hpp"

#include <chrono>
#include <sstream>

#include "wgb/fglm.hpp"
#include "wgb/matrix_f5.hpp"

namespace wgb {

namespace {

double ratio(unsigned long long num, unsigned long long den) {
    if (den == 0) return 0.0;
    return static_cast<double>(num) / static_cast<double>(den);
}

template <class F>
auto timed(double& ms, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    auto out = body();
    const auto t1 = std::chrono::steady_clock::now();
    ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return out;
}

}  // namespace

double BenchRow::f5_speedup() const { return ratio(f5_ops_std, f5_ops_qh); }
double BenchRow::fglm_speedup() const {
    return ratio(fglm_ops_std, fglm_ops_qh);
}

BenchRow run_bench(const PolySystem& F, const std::string& label) {
    BenchRow row;
    row.label = label;

    const F5Result qh = timed(row.f5_ms_qh, [&] { return matrix_f5(F); });
    row.f5_ops_qh = qh.ops;
    row.quotient_degree = static_cast<long long>(qh.basis.staircase.size());
    const QuotientBasis q = quotient_basis(qh.basis);
    const FGLMResult lex =
        timed(row.fglm_ms_qh, [&] { return fglm_to_lex(q); });
    row.fglm_ops_qh = lex.ops;

    const RingPtr ring_u = unit_weight_ring(F.ring);
    std::vector<Polynomial> image;
    image.reserve(F.polys.size());
    for (const Polynomial& f : F.polys) image.push_back(hom_w(f, ring_u));
    const PolySystem F_u = make_system(ring_u, std::move(image));
    const F5Result std_run =
        timed(row.f5_ms_std, [&] { return matrix_f5(F_u); });
    row.f5_ops_std = std_run.ops;
    row.quotient_degree_std =
        static_cast<long long>(std_run.basis.staircase.size());
    const QuotientBasis q_u = quotient_basis(std_run.basis);
    const FGLMResult lex_u =
        timed(row.fglm_ms_std, [&] { return fglm_to_lex(q_u); });
    row.fglm_ops_std = lex_u.ops;

    return row;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "system,deg_I,deg_I_std,f5_ops_qh,f5_ops_std,f5_speedup,"
           "fglm_ops_qh,fglm_ops_std,fglm_speedup,"
           "f5_ms_qh,f5_ms_std,fglm_ms_qh,fglm_ms_std\n";
    for (const BenchRow& r : rows) {
        out << r.label << ',' << r.quotient_degree << ','
            << r.quotient_degree_std << ',' << r.f5_ops_qh << ','
            << r.f5_ops_std << ',' << r.f5_speedup() << ',' << r.fglm_ops_qh
            << ',' << r.fglm_ops_std << ',' << r.fglm_speedup() << ','
            << r.f5_ms_qh << ',' << r.f5_ms_std << ',' << r.fglm_ms_qh << ','
            << r.fglm_ms_std << '\n';
    }
    return out.str();
}

}  // namespace wgb
