#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "wgb/matrix_f5.hpp"
#include "wgb/structure.hpp"

using namespace wgb;

namespace {

struct T {
    std::uint32_t c;
    std::vector<int> e;
};

Polynomial poly(const RingPtr& ring, std::initializer_list<T> ts) {
    std::vector<Term> terms;
    for (const T& t : ts)
        terms.push_back(Term{make_monomial(t.e, ring->weights), t.c});
    return Polynomial(ring, Order::WGrevlex, std::move(terms));
}

PolySystem running_example() {
    RingPtr r = make_ring(65521, {2, 3}, {"x", "y"});
    return make_system(r, {poly(r, {{1, {1, 1}}}),
                           poly(r, {{1, {3, 0}}, {1, {0, 2}}})});
}

std::vector<std::vector<int>> lead_exps(const GroebnerBasis& g) {
    std::vector<std::vector<int>> out;
    for (const Polynomial& f : g.polys) out.push_back(f.leading_monomial().exps);
    return out;
}

}  // namespace

TEST(MatrixF5, RunningExampleBasis) {
    F5Result res = matrix_f5(running_example());
    ASSERT_EQ(res.basis.polys.size(), 3u);
    // Ascending leading monomials: xy, x^3, y^3.
    EXPECT_EQ(lead_exps(res.basis),
              (std::vector<std::vector<int>>{{1, 1}, {3, 0}, {0, 3}}));
    RingPtr r = res.basis.polys[0].ring();
    EXPECT_EQ(res.basis.polys[1], poly(r, {{1, {3, 0}}, {1, {0, 2}}}));
    EXPECT_EQ(res.basis.polys[2], poly(r, {{1, {0, 3}}}));
    EXPECT_TRUE(res.basis.zero_dimensional);
    EXPECT_EQ(res.basis.observed_dreg, 9);
    EXPECT_EQ(res.basis.reductions_to_zero, 0u);
    ASSERT_EQ(res.basis.staircase.size(), 5u);
    // Ascending W-grevlex: 1, x, y, x^2, y^2.
    EXPECT_EQ(res.basis.staircase[0].exps, (std::vector<int>{0, 0}));
    EXPECT_EQ(res.basis.staircase[1].exps, (std::vector<int>{1, 0}));
    EXPECT_EQ(res.basis.staircase[2].exps, (std::vector<int>{0, 1}));
    EXPECT_EQ(res.basis.staircase[3].exps, (std::vector<int>{2, 0}));
    EXPECT_EQ(res.basis.staircase[4].exps, (std::vector<int>{0, 2}));
}

TEST(MatrixF5, RejectsIllFormedInput) {
    RingPtr r = make_ring(65521, {2, 3});
    // Not weighted homogeneous.
    PolySystem bad = make_system(r, {poly(r, {{1, {1, 1}}, {1, {0, 0}}})});
    EXPECT_THROW(matrix_f5(bad), std::invalid_argument);
    // Overdetermined without an explicit truncation degree.
    PolySystem over = make_system(r, {poly(r, {{1, {1, 1}}}),
                                      poly(r, {{1, {3, 0}}}),
                                      poly(r, {{1, {0, 2}}})});
    EXPECT_THROW(matrix_f5(over), std::invalid_argument);
    F5Options opts;
    opts.d_max = 8;
    EXPECT_NO_THROW(matrix_f5(over, opts));
}

TEST(MatrixF5, TruncationProducesPartialBasis) {
    F5Options opts;
    opts.d_max = 6;  // stops before the degree-9 element y^3 appears
    F5Result res = matrix_f5(running_example(), opts);
    EXPECT_EQ(res.basis.truncation_wdeg, 6);
    EXPECT_EQ(lead_exps(res.basis),
              (std::vector<std::vector<int>>{{1, 1}, {3, 0}}));
    EXPECT_FALSE(res.basis.zero_dimensional);
}

TEST(MatrixF5, PositiveDimensionalDetected) {
    RingPtr r = make_ring(65521, {2, 3});
    PolySystem F = make_system(r, {poly(r, {{1, {1, 1}}})});
    F5Result res = matrix_f5(F);
    EXPECT_FALSE(res.basis.zero_dimensional);
    EXPECT_TRUE(res.basis.staircase.empty());
}

TEST(MatrixF5, TrivialSyzygyWitnessReducesToZero) {
    RingPtr r = make_ring(65521, {2, 3});
    Polynomial f = poly(r, {{1, {1, 1}}});
    Polynomial xf = f.term_multiplied(1, make_monomial({1, 0}, r->weights));
    PolySystem F = make_system(r, {f, xf});
    F5Result res = matrix_f5(F);
    EXPECT_GE(res.basis.reductions_to_zero, 1u);
}

TEST(MatrixF5, CriterionMatchesNaiveZeroReductions) {
    // On a regular sequence the signature criterion removes exactly the rows
    // a criterion-free run would reduce to zero.
    const struct {
        std::vector<int> W;
        std::vector<long long> D;
        std::uint64_t seed;
    } configs[] = {
        {{2, 3}, {6, 6}, 1},
        {{1, 2}, {4, 6}, 2},
        {{1, 1, 2}, {4, 4, 4}, 3},
        {{1, 2, 3}, {6, 6, 6}, 4},
    };
    for (const auto& cfg : configs) {
        RingPtr r = make_ring(65521, cfg.W);
        PolySystem F = gen_generic(r, cfg.D, cfg.seed, GenShape::Whomog);
        ASSERT_TRUE(is_regular(F).regular);
        F5Result with = matrix_f5(F);
        F5Options off;
        off.use_criterion = false;
        F5Result naive = matrix_f5(F, off);
        EXPECT_EQ(with.basis.reductions_to_zero, 0u);
        EXPECT_EQ(with.rejected, naive.basis.reductions_to_zero);
        EXPECT_LE(with.ops, naive.ops);
        EXPECT_EQ(with.basis.polys, naive.basis.polys);
    }
}

TEST(MatrixF5, PullbackEqualsDirectRun) {
    PolySystem F = running_example();
    F5Result direct = matrix_f5(F);
    F5Result pulled = matrix_f5_hom(F);
    EXPECT_EQ(direct.basis.polys, pulled.basis.polys);
    EXPECT_EQ(direct.basis.staircase.size(), pulled.basis.staircase.size());
    // The embedded run works in the standard grading, where each degree has
    // at least as many monomials.
    for (const DegreeStats& ds : direct.degrees) {
        for (const DegreeStats& hs : pulled.degrees) {
            if (hs.wdeg == ds.wdeg) EXPECT_GE(hs.cols, ds.cols);
        }
    }
}

TEST(MatrixF5, ColumnCountsMatchEnumeration) {
    PolySystem F = running_example();
    F5Result res = matrix_f5(F);
    const WeightSystem& W = F.ring->weights;
    for (const DegreeStats& ds : res.degrees)
        EXPECT_EQ(Int(ds.cols), count_monomials(ds.wdeg, W, 2)) << ds.wdeg;
}

TEST(MatrixF5, DegreeCsvShape) {
    F5Result res = matrix_f5(running_example());
    std::istringstream csv(degree_csv(res));
    std::string header;
    ASSERT_TRUE(std::getline(csv, header));
    EXPECT_EQ(header, "degree,rows,cols,ops,new_polys");
    std::size_t rows = 0;
    std::string line;
    while (std::getline(csv, line)) ++rows;
    EXPECT_EQ(rows, res.degrees.size());
}

TEST(MatrixF5, StaircaseRecomputation) {
    F5Result res = matrix_f5(running_example());
    GroebnerBasis copy = res.basis;
    copy.staircase.clear();
    copy.zero_dimensional = false;
    compute_staircase(copy, running_example().ring->weights);
    EXPECT_TRUE(copy.zero_dimensional);
    EXPECT_EQ(copy.staircase.size(), res.basis.staircase.size());
}
