#include <gtest/gtest.h>

#include <vector>

#include "wgb/errors.hpp"
#include "wgb/polynomial.hpp"

using namespace wgb;

namespace {

struct T {
    std::uint32_t c;
    std::vector<int> e;
};

Polynomial poly(const RingPtr& ring, std::initializer_list<T> ts,
                Order order = Order::WGrevlex) {
    std::vector<Term> terms;
    for (const T& t : ts)
        terms.push_back(Term{make_monomial(t.e, ring->weights), t.c});
    return Polynomial(ring, order, std::move(terms));
}

}  // namespace

TEST(Ring, Construction) {
    RingPtr r = make_ring(65521, {2, 3});
    EXPECT_EQ(r->nvars(), 2);
    EXPECT_EQ(r->vars, (std::vector<std::string>{"x1", "x2"}));
    RingPtr named = make_ring(65521, {2, 3}, {"x", "y"});
    EXPECT_EQ(named->vars[0], "x");
    EXPECT_THROW(make_ring(65521, {2, 3}, {"x"}), std::invalid_argument);
    EXPECT_THROW(make_ring(65521, {0, 1}), std::invalid_argument);
    EXPECT_THROW(make_ring(65521, {}), std::invalid_argument);
}

TEST(Polynomial, NormalizationOnConstruction) {
    RingPtr r = make_ring(65521, {2, 3});
    // Duplicate monomials merge, zero coefficients drop, terms sort
    // descending.
    Polynomial f = poly(r, {{1, {0, 2}}, {65520, {0, 2}}, {3, {1, 1}},
                            {0, {2, 0}}, {2, {3, 0}}});
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f.leading_monomial().exps, (std::vector<int>{3, 0}));
    EXPECT_EQ(f.terms()[1].mon.exps, (std::vector<int>{1, 1}));
}

TEST(Polynomial, ArithmeticRoundTrip) {
    RingPtr r = make_ring(65521, {2, 3});
    Polynomial f = poly(r, {{2, {3, 0}}, {5, {0, 2}}});
    Polynomial g = poly(r, {{7, {1, 1}}, {65519, {0, 2}}});
    Polynomial sum = f.add(g);
    EXPECT_EQ(sum.sub(g), f);
    EXPECT_EQ(f.sub(f).size(), 0u);
    Polynomial doubled = f.scaled(2);
    EXPECT_EQ(doubled.sub(f), f);
    EXPECT_TRUE(f.scaled(0).is_zero());
}

TEST(Polynomial, TermMultipliedAndMonic) {
    RingPtr r = make_ring(65521, {2, 3});
    Polynomial f = poly(r, {{2, {3, 0}}, {5, {0, 2}}});
    Monomial xy = make_monomial({1, 1}, r->weights);
    Polynomial shifted = f.term_multiplied(3, xy);
    ASSERT_EQ(shifted.size(), 2u);
    EXPECT_EQ(shifted.leading_monomial().exps, (std::vector<int>{4, 1}));
    EXPECT_EQ(shifted.leading_term().coeff, 6u);
    Polynomial m = f.monic();
    EXPECT_EQ(m.leading_term().coeff, 1u);
    EXPECT_EQ(m.scaled(f.leading_term().coeff), f);
}

TEST(Polynomial, SubScaledShiftIsDivisionStep) {
    RingPtr r = make_ring(65521, {2, 3});
    Polynomial f = poly(r, {{1, {4, 1}}, {1, {0, 2}}});
    Polynomial g = poly(r, {{1, {3, 0}}, {4, {0, 2}}});
    // f - 1 * xy * g cancels the leading term.
    Polynomial red = f.sub_scaled_shift(g, 1, make_monomial({1, 1},
                                                            r->weights));
    EXPECT_LT(r->cmp(Order::WGrevlex, red.leading_monomial(),
                     f.leading_monomial()),
              0);
}

TEST(Polynomial, ResortedChangesLeader) {
    RingPtr r = make_ring(65521, {2, 3});
    // Under W-grevlex y^2 (wdeg 6) beats x^2 (wdeg 4); under Lex x^2 wins.
    Polynomial f = poly(r, {{1, {0, 2}}, {1, {2, 0}}});
    EXPECT_EQ(f.leading_monomial().exps, (std::vector<int>{0, 2}));
    Polynomial lex = f.resorted(Order::Lex);
    EXPECT_EQ(lex.leading_monomial().exps, (std::vector<int>{2, 0}));
    EXPECT_EQ(lex.resorted(Order::WGrevlex), f);
}

TEST(Polynomial, Homogeneity) {
    RingPtr r = make_ring(65521, {2, 3});
    Polynomial f = poly(r, {{1, {3, 0}}, {1, {0, 2}}});
    auto rep = is_whomogeneous(f);
    EXPECT_TRUE(rep.whomogeneous);
    EXPECT_EQ(rep.wdeg, 6);
    Polynomial g = poly(r, {{1, {3, 0}}, {1, {1, 1}}});
    EXPECT_FALSE(is_whomogeneous(g).whomogeneous);
    EXPECT_EQ(top_wdeg(g), 6);
    EXPECT_EQ(top_component(g), poly(r, {{1, {3, 0}}}));
}

TEST(Polynomial, WeightedEmbedding) {
    RingPtr r = make_ring(65521, {2, 3});
    RingPtr u = unit_weight_ring(r);
    EXPECT_EQ(u->weights.weights(), (std::vector<int>{1, 1}));
    Polynomial f = poly(r, {{1, {3, 0}}, {1, {0, 2}}, {5, {1, 1}}});
    Polynomial image = hom_w(f, u);
    // Exponents scale by the weights; weighted degree becomes total degree.
    for (const Term& t : image.terms()) {
        long long total = 0;
        for (int e : t.mon.exps) total += e;
        EXPECT_EQ(total, t.mon.wdeg);
    }
    EXPECT_EQ(dehom_w(image, r), f);
    // The embedding preserves the order: leading terms correspond.
    EXPECT_EQ(image.leading_monomial().exps,
              hom_exponents(f.leading_monomial(), r->weights).exps);
}

TEST(Polynomial, NormalFormAgainstReducedBasis) {
    RingPtr r = make_ring(65521, {2, 3});
    std::vector<Polynomial> G = {
        poly(r, {{1, {1, 1}}}),                 // xy
        poly(r, {{1, {3, 0}}, {1, {0, 2}}}),    // x^3 + y^2
        poly(r, {{1, {0, 3}}}),                 // y^3
    };
    Polynomial x3 = poly(r, {{1, {3, 0}}});
    Polynomial nf = normal_form(x3, G);
    EXPECT_EQ(nf, poly(r, {{65520, {0, 2}}}));
    // Normal form of a basis element is zero; remainder is stable.
    EXPECT_TRUE(normal_form(G[1], G).is_zero());
    EXPECT_EQ(normal_form(nf, G), nf);
}

TEST(System, MakeSystemContracts) {
    RingPtr r = make_ring(65521, {2, 3});
    PolySystem F = make_system(
        r, {poly(r, {{1, {1, 1}}}), poly(r, {{1, {3, 0}}, {1, {0, 2}}})});
    EXPECT_TRUE(F.whomogeneous);
    EXPECT_EQ(F.wdegrees, (std::vector<long long>{5, 6}));
    PolySystem G = make_system(
        r, {poly(r, {{1, {1, 1}}, {3, {0, 0}}})});
    EXPECT_FALSE(G.whomogeneous);
    EXPECT_EQ(G.wdegrees, (std::vector<long long>{5}));
    EXPECT_THROW(make_system(r, {Polynomial(r, Order::WGrevlex)}),
                 std::invalid_argument);
}
