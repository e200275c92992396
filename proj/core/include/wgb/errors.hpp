#pragma once

#include <stdexcept>
#include <string>

namespace wgb {

// A monomial is not in the image of the weighted embedding.
struct NotInImageError : std::domain_error {
    explicit NotInImageError(const std::string& what) : std::domain_error(what) {}
};

// Exponent vectors or weight vectors of different lengths were combined.
struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// A zero-dimensional quotient was required but the staircase is infinite.
struct DimensionPositiveError : std::domain_error {
    explicit DimensionPositiveError(const std::string& what) : std::domain_error(what) {}
};

// A generator was requested at a weighted degree with no monomials.
struct EmptyDegreeError : std::domain_error {
    explicit EmptyDegreeError(const std::string& what) : std::domain_error(what) {}
};

// Homogenization cannot lift a term because its degree gap is not a
// multiple of the homogenization variable's weight.
struct NonIntegralLiftError : std::domain_error {
    explicit NonIntegralLiftError(const std::string& what) : std::domain_error(what) {}
};

// Malformed input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wgb
