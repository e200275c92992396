#pragma once

#include <vector>

#include "wgb/polynomial.hpp"

namespace wgb {

// S-polynomial with both cofactors scaled so the leading terms cancel.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Drops elements whose leading monomial is divisible by another's, reduces
// every survivor modulo the rest, scales monic and sorts by ascending
// leading monomial.  Survivor leading terms are stable under the reduction,
// so a single pass yields the reduced basis.
std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    Order order);

// Textbook Buchberger with the coprime-pair criterion and lowest-degree
// pair selection; returns the reduced basis.  Correctness oracle for small
// inputs, not a performance path.
std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> gens,
                                           Order order);

}  // namespace wgb
