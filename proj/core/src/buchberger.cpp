#include "wgb/buchberger.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace wgb {

namespace {

Monomial lcm_monomial(const Monomial& a, const Monomial& b,
                      const WeightSystem& W) {
    Monomial r;
    r.exps.resize(a.exps.size());
    for (std::size_t k = 0; k < a.exps.size(); ++k)
        r.exps[k] = std::max(a.exps[k], b.exps[k]);
    r.wdeg = weighted_degree(r.exps, W);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t k = 0; k < a.exps.size(); ++k)
        if (a.exps[k] > 0 && b.exps[k] > 0) return false;
    return true;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Ring& ring = *f.ring();
    const Monomial lcm =
        lcm_monomial(f.leading_monomial(), g.leading_monomial(), ring.weights);
    const Monomial u = div_monomial(lcm, f.leading_monomial(), ring.weights);
    const Monomial v = div_monomial(lcm, g.leading_monomial(), ring.weights);
    const std::uint32_t cu = ring.field.inv(f.leading_term().coeff);
    const std::uint32_t cv = ring.field.inv(g.leading_term().coeff);
    return f.term_multiplied(cu, u).sub(g.term_multiplied(cv, v));
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis,
                                    Order order) {
    std::vector<Polynomial> sorted;
    for (auto& f : basis) {
        if (f.is_zero()) continue;
        sorted.push_back(f.order() == order ? std::move(f)
                                            : f.resorted(order));
    }
    if (sorted.empty()) return sorted;
    const Ring& ring = *sorted.front().ring();
    std::sort(sorted.begin(), sorted.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ring.cmp(order, a.leading_monomial(),
                                  b.leading_monomial()) < 0;
              });
    // A proper divisor is strictly smaller in any monomial order, so keeping
    // only elements whose leading monomial escapes the earlier ones yields
    // the minimal leading-term set.
    std::vector<Polynomial> minimal;
    for (auto& f : sorted) {
        bool redundant = false;
        for (const Polynomial& g : minimal)
            if (divides(g.leading_monomial(), f.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(std::move(f));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others).monic());
    }
    return reduced;
}

std::vector<Polynomial> buchberger_reduced(std::vector<Polynomial> gens,
                                           Order order) {
    std::vector<Polynomial> G;
    for (auto& f : gens) {
        if (f.is_zero()) continue;
        G.push_back(f.order() == order ? std::move(f) : f.resorted(order));
    }
    if (G.empty()) return G;
    const Ring& ring = *G.front().ring();

    struct Pair {
        long long lcm_wdeg;
        std::size_t i, j;
    };
    auto later = [](const Pair& a, const Pair& b) {
        return a.lcm_wdeg > b.lcm_wdeg;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Monomial lcm = lcm_monomial(
                G[i].leading_monomial(), G[j].leading_monomial(), ring.weights);
            queue.push({lcm.wdeg, i, j});
        }
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);

    while (!queue.empty()) {
        const Pair p = queue.top();
        queue.pop();
        if (coprime(G[p.i].leading_monomial(), G[p.j].leading_monomial()))
            continue;
        const Polynomial r =
            normal_form(s_polynomial(G[p.i], G[p.j]), G);
        if (r.is_zero()) continue;
        G.push_back(r.monic());
        push_pairs(G.size() - 1);
    }
    return interreduce(std::move(G), order);
}

}  // namespace wgb
