#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wgb/monomial.hpp"
#include "wgb/prime_field.hpp"
#include "wgb/weights.hpp"

namespace wgb {

enum class Order { WGrevlex, Lex };

// Shared context: coefficient field, weights and variable names.
struct Ring {
    PrimeField field;
    WeightSystem weights;
    std::vector<std::string> vars;

    Ring(PrimeField f, WeightSystem w, std::vector<std::string> names);
    int nvars() const { return weights.nvars(); }
    int cmp(Order o, const Monomial& a, const Monomial& b) const {
        return o == Order::WGrevlex ? cmp_wgrevlex(a, b, weights)
                                    : cmp_lex(a, b);
    }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<int> weights,
                  std::vector<std::string> names = {});

// Default variable names x1..xn.
std::vector<std::string> default_var_names(int n);

struct Term {
    Monomial mon;
    std::uint32_t coeff = 0;
};

// Sparse polynomial over GF(p).  Terms are sorted strictly descending under
// the active order; no zero coefficients, no duplicate monomials.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(RingPtr ring, Order order);
    // Normalizes: merges duplicates, drops zeros, sorts descending.
    Polynomial(RingPtr ring, Order order, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    Order order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const;

    Polynomial resorted(Order order) const;

    Polynomial add(const Polynomial& other) const;
    Polynomial sub(const Polynomial& other) const;
    Polynomial scaled(std::uint32_t c) const;
    // this - c * t * other, the division-step update.
    Polynomial sub_scaled_shift(const Polynomial& other, std::uint32_t c,
                                const Monomial& t) const;
    Polynomial term_multiplied(std::uint32_t c, const Monomial& t) const;
    // Leading coefficient scaled to 1.
    Polynomial monic() const;

    bool operator==(const Polynomial& other) const;

    std::string to_string() const;

private:
    RingPtr ring_;
    Order order_ = Order::WGrevlex;
    std::vector<Term> terms_;
};

Polynomial zero_polynomial(RingPtr ring, Order order = Order::WGrevlex);
Polynomial constant_polynomial(RingPtr ring, std::uint32_t c,
                               Order order = Order::WGrevlex);

// True plus the shared degree when all terms have one weighted degree.
// Zero polynomials report true with degree 0; constants degree 0.
struct HomogeneityReport {
    bool whomogeneous = false;
    long long wdeg = 0;
};
HomogeneityReport is_whomogeneous(const Polynomial& f);

// Sum of the terms of maximal weighted degree; rejects zero input.
Polynomial top_component(const Polynomial& f);
long long top_wdeg(const Polynomial& f);

// Termwise weighted embedding into the unit-weight algebra over the same
// variable count, and its left inverse.  hom_ring/dehom target rings are
// derived from f's ring (weights replaced, names kept).
Polynomial hom_w(const Polynomial& f, const RingPtr& image_ring);
Polynomial dehom_w(const Polynomial& f, const RingPtr& source_ring);
RingPtr unit_weight_ring(const RingPtr& ring);

// Remainder of multivariate division of f by the (autoreduced) family G
// under f's order: no term of the result is divisible by any leading
// monomial of G, and f minus the result lies in the ideal of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

// Ordered system f_1..f_m with declared weighted degrees.  For a weighted
// homogeneous system the declared degree of f_i is its shared term degree;
// otherwise it is the top-component degree.
struct PolySystem {
    RingPtr ring;
    std::vector<Polynomial> polys;
    std::vector<long long> wdegrees;
    bool whomogeneous = false;

    int nvars() const { return ring->nvars(); }
    int npolys() const { return static_cast<int>(polys.size()); }
};

PolySystem make_system(RingPtr ring, std::vector<Polynomial> polys);

}  // namespace wgb
