#pragma once

#include <cstdint>
#include <vector>

#include "wgb/fglm.hpp"
#include "wgb/matrix_f5.hpp"
#include "wgb/structure.hpp"

namespace wgb {

// Non-homogeneous input prepared for homogenization: top W-degrees, the
// constant parts when every polynomial is a top component plus a constant,
// and the weight the fresh variable will carry.
struct AffineSystem {
    RingPtr ring;
    std::vector<Polynomial> polys;
    std::vector<long long> top_wdegs;
    // Every polynomial is top component + constant; enables the gcd trick.
    bool shape_constant = false;
    std::vector<std::uint32_t> lambdas;  // constant terms (0 when absent)
    int h_weight = 1;  // gcd of the top degrees for the constant shape
};

AffineSystem make_affine(RingPtr ring, std::vector<Polynomial> polys);

// Embeds into n+1 variables with a fresh last variable of weight h_weight
// (0 picks F.h_weight): each term is padded to its polynomial's top degree.
// Throws NonIntegralLiftError when a degree gap is not a multiple of the
// weight.
PolySystem homogenize(const AffineSystem& F, int h_weight = 0);

// Regularity of the top components.
bool is_affine_regular(const AffineSystem& F);

struct AffineSolveReport {
    bool affine_regular = false;
    bool truncation_sound = false;  // follows affine_regular
    int h_weight = 1;
    long long d_max = 0;
    long long observed_dreg = -1;
    unsigned long long f5_ops = 0;
    unsigned long long fglm_ops = 0;
    unsigned long long degree_falls = 0;
    unsigned long long reductions_to_zero = 0;
    std::vector<DegreeStats> degrees;  // stats of the homogenized run
    GroebnerBasis wgrevlex_basis;      // specialized at H=1, interreduced
};

struct AffineSolveResult {
    GroebnerBasis lex_basis;
    AffineSolveReport report;
};

// Full pipeline: homogenize, run the truncated basis computation, set the
// fresh variable to 1, interreduce, then change order to Lex through the
// quotient.  d_max < 0 selects sum(d_i - w_i) + max(max w, h_weight), the
// completion degree when the homogenized sequence is regular.
AffineSolveResult solve_affine(const AffineSystem& F, int h_weight = 0,
                               long long d_max = -1);

}  // namespace wgb
