// Weighted pipeline against its unit-weight counterpart on seeded generic
// systems.  The standard lane solves the embedded system, whose quotient is
// larger by the weight product.

#include <benchmark/benchmark.h>

#include <vector>

#include "wgb/fglm.hpp"
#include "wgb/matrix_f5.hpp"
#include "wgb/structure.hpp"

namespace {

using namespace wgb;

struct Setup {
    PolySystem weighted;
    PolySystem standard_image;
    QuotientBasis weighted_quotient;
    QuotientBasis standard_quotient;
};

const Setup& setup(int idx) {
    static const std::vector<Setup> cache = [] {
        struct Cfg {
            std::vector<int> W;
            std::vector<long long> D;
        };
        const std::vector<Cfg> cfgs = {
            {{2, 3}, {6, 6}},
            {{1, 2, 3}, {6, 6, 6}},
            {{2, 2, 1, 1}, {4, 4, 4, 4}},
        };
        std::vector<Setup> out;
        for (const Cfg& cfg : cfgs) {
            RingPtr ring = make_ring(65521, cfg.W);
            PolySystem F = gen_generic(ring, cfg.D, 1, GenShape::Whomog);
            for (std::uint64_t seed = 2; !is_regular(F).regular && seed <= 10;
                 ++seed)
                F = gen_generic(ring, cfg.D, seed, GenShape::Whomog);
            RingPtr unit = unit_weight_ring(ring);
            std::vector<Polynomial> image;
            for (const Polynomial& f : F.polys)
                image.push_back(hom_w(f, unit));
            PolySystem Fstd = make_system(unit, image);
            out.push_back(Setup{F, Fstd,
                                quotient_basis(matrix_f5(F).basis),
                                quotient_basis(matrix_f5(Fstd).basis)});
        }
        return out;
    }();
    return cache[static_cast<std::size_t>(idx)];
}

void BM_F5Weighted(benchmark::State& state) {
    const Setup& s = setup(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(matrix_f5(s.weighted));
}

void BM_F5Standard(benchmark::State& state) {
    const Setup& s = setup(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(matrix_f5(s.standard_image));
}

void BM_FGLMWeighted(benchmark::State& state) {
    const Setup& s = setup(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fglm_to_lex(s.weighted_quotient));
}

void BM_FGLMStandard(benchmark::State& state) {
    const Setup& s = setup(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fglm_to_lex(s.standard_quotient));
}

BENCHMARK(BM_F5Weighted)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_F5Standard)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FGLMWeighted)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FGLMStandard)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
