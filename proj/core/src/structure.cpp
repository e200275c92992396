#include "wgb/structure.hpp"

#include <random>
#include <stdexcept>

#include "wgb/errors.hpp"
#include "wgb/hilbert.hpp"
#include "wgb/matrix_f5.hpp"

namespace wgb {

RegularityReport is_regular(const PolySystem& F) {
    if (!F.whomogeneous)
        throw std::invalid_argument(
            "regularity test requires weighted homogeneous input");
    if (F.npolys() > F.nvars())
        throw std::invalid_argument(
            "regularity test requires at most as many polynomials as "
            "variables");
    const WeightSystem& W = F.ring->weights;
    const SystemProfile prof = profile(W, F.wdegrees);
    const long long bound = prof.dreg_bound;
    const HilbertSeries expected = series_regular(W, F.wdegrees, bound);

    const F5Result run = matrix_f5(F);
    RegularityReport rep;
    rep.reductions_to_zero = run.basis.reductions_to_zero;

    std::vector<Monomial> lts;
    lts.reserve(run.basis.polys.size());
    for (const Polynomial& f : run.basis.polys)
        lts.push_back(f.leading_monomial());
    for (long long d = 0; d <= bound; ++d) {
        Int standard = 0;
        for (const Monomial& m : monomials_of_wdeg(d, W)) {
            bool covered = false;
            for (const Monomial& lt : lts)
                if (divides(lt, m)) {
                    covered = true;
                    break;
                }
            if (!covered) ++standard;
        }
        if (standard != expected.coeff(d)) {
            rep.regular = false;
            rep.witness_degree = d;
            return rep;
        }
    }
    rep.regular = true;
    return rep;
}

bool is_noether_position(const PolySystem& F) {
    if (!F.whomogeneous)
        throw std::invalid_argument(
            "Noether-position test requires weighted homogeneous input");
    const int n = F.nvars();
    const int m = F.npolys();
    if (m > n)
        throw std::invalid_argument(
            "Noether-position test requires at most as many polynomials as "
            "variables");
    std::vector<Polynomial> ext = F.polys;
    for (int k = m; k < n; ++k) {
        std::vector<int> exps(static_cast<std::size_t>(n), 0);
        exps[static_cast<std::size_t>(k)] = 1;
        ext.emplace_back(F.ring, Order::WGrevlex,
                         std::vector<Term>{Term{
                             make_monomial(std::move(exps), F.ring->weights),
                             1}});
    }
    return is_regular(make_system(F.ring, std::move(ext))).regular;
}

namespace {

// Appends one draw per monomial; zero draws contribute nothing.
void draw_terms(std::vector<Term>& terms, const std::vector<Monomial>& monos,
                std::mt19937_64& rng, std::uint64_t p) {
    for (const Monomial& m : monos) {
        const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
        if (c) terms.push_back(Term{m, c});
    }
}

}  // namespace

PolySystem gen_generic(RingPtr ring, const std::vector<long long>& wdegrees,
                       std::uint64_t seed, GenShape shape) {
    const WeightSystem& W = ring->weights;
    const std::uint64_t p = ring->field.modulus();
    std::mt19937_64 rng(seed);

    std::vector<std::vector<Monomial>> tops;
    tops.reserve(wdegrees.size());
    for (long long d : wdegrees) {
        tops.push_back(monomials_of_wdeg(d, W));
        if (tops.back().empty())
            throw EmptyDegreeError("no monomial has the requested W-degree " +
                                   std::to_string(d));
    }

    std::vector<Polynomial> polys;
    polys.reserve(wdegrees.size());
    for (std::size_t i = 0; i < wdegrees.size(); ++i) {
        const long long d = wdegrees[i];
        while (true) {
            std::vector<Term> terms;
            draw_terms(terms, tops[i], rng, p);
            const bool top_present = !terms.empty();
            switch (shape) {
                case GenShape::Whomog:
                    break;
                case GenShape::WhomogPlusConstant: {
                    const std::uint32_t lambda =
                        static_cast<std::uint32_t>(1 + rng() % (p - 1));
                    if (d > 0)
                        terms.push_back(Term{one_monomial(W), lambda});
                    break;
                }
                case GenShape::AffineUpToDegree:
                    for (long long e = d - 1; e >= 0; --e)
                        draw_terms(terms, monomials_of_wdeg(e, W), rng, p);
                    break;
            }
            if (!top_present) continue;  // keep the declared degree exact
            polys.emplace_back(ring, Order::WGrevlex, std::move(terms));
            break;
        }
    }
    return make_system(std::move(ring), std::move(polys));
}

}  // namespace wgb
