#pragma once

#include <cstdint>
#include <vector>

#include "wgb/polynomial.hpp"

namespace wgb {

struct RegularityReport {
    bool regular = false;
    // First degree where the quotient Hilbert function deviates from the
    // regular-sequence series; -1 when none does up to the checked bound.
    long long witness_degree = -1;
    // Cross-check: a regular run performs no reduction to zero.
    unsigned long long reductions_to_zero = 0;
};

// Compares the quotient Hilbert function of a full truncated run against
// the regular-sequence series up to sum(d_i - w_i) + max w.  Exact for
// m = n (the function vanishes on a window wider than any weight, so it
// vanishes forever); for m < n it is the contract's truncated comparison.
RegularityReport is_regular(const PolySystem& F);

// Appends the trailing variables x_{m+1}..x_n and tests regularity of the
// extended sequence.
bool is_noether_position(const PolySystem& F);

enum class GenShape {
    Whomog,              // uniform coefficients on monomials of W-degree d_i
    WhomogPlusConstant,  // the same plus a nonzero constant
    AffineUpToDegree,    // uniform coefficients on all monomials of W-degree
                         // at most d_i, top component kept nonzero
};

// Deterministic seeded generator.  Coefficients are drawn per monomial in
// descending W-grevlex order (degrees descending first for the affine
// shape) as mt19937_64 output mod p; zero draws drop the monomial, and a
// draw whose top component vanishes is redrawn by continuing the stream.
// Throws EmptyDegreeError when no monomial of some required degree exists.
PolySystem gen_generic(RingPtr ring, const std::vector<long long>& wdegrees,
                       std::uint64_t seed, GenShape shape);

}  // namespace wgb
