#pragma once

#include <cstdint>
#include <vector>

#include "wgb/matrix_f5.hpp"

namespace wgb {

// Multiplication structure of a finite-dimensional quotient algebra.
struct QuotientBasis {
    RingPtr ring;
    std::vector<Monomial> staircase;  // ascending W-grevlex, unit first
    // mul_maps[k][j] = coordinates over the staircase of the normal form of
    // x_k times staircase[j].
    std::vector<std::vector<std::vector<std::uint32_t>>> mul_maps;
};

// Builds the staircase-indexed multiplication maps by normal-form division
// against the reduced basis.  Throws DimensionPositiveError unless the
// basis certifies a finite quotient.
QuotientBasis quotient_basis(const GroebnerBasis& g);

struct FGLMResult {
    GroebnerBasis basis;         // Lex, reduced
    unsigned long long ops = 0;  // muladds executed in vector arithmetic
};

// Change of order to Lex: enumerate monomials in increasing Lex order,
// track their quotient coordinates through the multiplication maps, and
// turn each linear dependency into a basis element.
FGLMResult fglm_to_lex(const QuotientBasis& q);

}  // namespace wgb
