#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wgb/bigint.hpp"
#include "wgb/weights.hpp"

namespace wgb {

// Exponent vector with its weighted degree cached.
// Invariant: wdeg equals the dot product of exps with the ambient weights.
struct Monomial {
    std::vector<int> exps;
    long long wdeg = 0;

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool is_one() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }
};

// Dot product of exponents with weights; validates dimensions.
long long weighted_degree(const std::vector<int>& exps, const WeightSystem& W);

// Builds a monomial with its weighted degree cached.
Monomial make_monomial(std::vector<int> exps, const WeightSystem& W);
Monomial one_monomial(const WeightSystem& W);

// Three-way comparators returning -1, 0 or +1.
//
// cmp_wgrevlex realizes the weighted graded reverse lexicographic order:
// compare weighted degrees first; on ties compare the weighted exponent
// vectors (w_n a_n, ..., w_1 a_1) from the last position backwards, and the
// larger entry at the first difference marks the SMALLER monomial.  This is
// exactly the plain grevlex comparison of the images under the weighted
// embedding (exponent a_i becomes w_i a_i).
int cmp_wgrevlex(const Monomial& a, const Monomial& b, const WeightSystem& W);

// Lexicographic order with x_1 > x_2 > ... > x_n.
int cmp_lex(const Monomial& a, const Monomial& b);

// a*b and a/b on exponent vectors; divide validates divisibility.
Monomial mul_monomial(const Monomial& a, const Monomial& b, const WeightSystem& W);
bool divides(const Monomial& a, const Monomial& b);
Monomial div_monomial(const Monomial& a, const Monomial& b, const WeightSystem& W);

// Index of the least variable of m under x_1 > ... > x_n, i.e. the largest
// 0-based index with a positive exponent; -1 for the monomial 1.
int least_variable(const Monomial& m);

// All monomials of weighted degree exactly d, sorted descending by
// cmp_wgrevlex, no duplicates.  Degrees with no monomials give an empty list.
std::vector<Monomial> monomials_of_wdeg(long long d, const WeightSystem& W);

// Exact count of monomials of weighted degree d in the first nvars variables,
// by coin-counting dynamic programming over one (d+1)-sized table.
Int count_monomials(long long d, const WeightSystem& W, int nvars);
Int count_monomials(long long d, const WeightSystem& W);

// Count for unit weights: binom(d + nvars - 1, nvars - 1); 0 for d < 0.
Int count_monomials_unit(long long d, int nvars);

// Exact bracket for count_monomials(d, W, n):
//   lower = (delta/P) * count_unit(d - T_n - n + 1, n)
//   upper = (delta/P) * count_unit(d + S_n - n + 1, n)
// Degrees outside the delta lattice hold no monomials; there the lower
// bound is the exact value zero.
std::pair<Rat, Rat> count_bounds(long long d, const WeightSystem& W);

// Exponent map of the weighted embedding: a_i becomes w_i a_i.  The image
// lives in the unit-weight algebra over the same variable count.
Monomial hom_exponents(const Monomial& m, const WeightSystem& W);

// Left inverse of hom_exponents; throws NotInImageError when some exponent
// is not divisible by its weight.
Monomial dehom_exponents(const Monomial& m, const WeightSystem& W);

// Hash for exponent vectors and monomials, for column lookup tables.
struct MonomialHash {
    std::size_t operator()(const std::vector<int>& e) const {
        std::size_t h = e.size();
        for (int x : e)
            h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
        return h;
    }
    std::size_t operator()(const Monomial& m) const {
        return (*this)(m.exps);
    }
};

}  // namespace wgb
