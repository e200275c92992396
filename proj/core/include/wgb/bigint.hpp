#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace wgb {

// Exact arithmetic for counts and cost estimates.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

// Smallest integer >= q.
inline Int ceil_rat(const Rat& q) {
    Int quot = q.numerator() / q.denominator();
    if (quot * q.denominator() != q.numerator() && q.numerator() > 0) quot += 1;
    return quot;
}

}  // namespace wgb
