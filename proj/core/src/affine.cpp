#include "wgb/affine.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "wgb/buchberger.hpp"
#include "wgb/errors.hpp"

namespace wgb {

AffineSystem make_affine(RingPtr ring, std::vector<Polynomial> polys) {
    AffineSystem sys;
    sys.shape_constant = true;
    long long degree_gcd = 0;
    for (Polynomial& f : polys) {
        if (f.is_zero())
            throw std::invalid_argument("zero polynomial in affine system");
        const long long d = top_wdeg(f);
        sys.top_wdegs.push_back(d);
        std::uint32_t lambda = 0;
        for (const Term& t : f.terms()) {
            if (t.mon.wdeg == d) continue;
            if (t.mon.is_one())
                lambda = t.coeff;
            else
                sys.shape_constant = false;
        }
        sys.lambdas.push_back(lambda);
        if (d > 0) degree_gcd = std::gcd(degree_gcd, d);
        sys.polys.push_back(std::move(f));
    }
    sys.ring = std::move(ring);
    sys.h_weight =
        sys.shape_constant && degree_gcd > 0 ? static_cast<int>(degree_gcd)
                                             : 1;
    return sys;
}

namespace {

std::string fresh_variable_name(const std::vector<std::string>& taken) {
    std::string name = "H";
    int suffix = 0;
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
        name = "H" + std::to_string(++suffix);
    return name;
}

}  // namespace

PolySystem homogenize(const AffineSystem& F, int h_weight) {
    if (h_weight == 0) h_weight = F.h_weight;
    if (h_weight < 1) throw std::invalid_argument("h_weight must be positive");
    const Ring& ring = *F.ring;

    std::vector<int> weights = ring.weights.weights();
    weights.push_back(h_weight);
    std::vector<std::string> names = ring.vars;
    names.push_back(fresh_variable_name(names));
    RingPtr hring = make_ring(ring.field.modulus(), std::move(weights),
                              std::move(names));

    std::vector<Polynomial> hpolys;
    hpolys.reserve(F.polys.size());
    for (std::size_t i = 0; i < F.polys.size(); ++i) {
        const long long d = F.top_wdegs[i];
        std::vector<Term> terms;
        terms.reserve(F.polys[i].size());
        for (const Term& t : F.polys[i].terms()) {
            const long long gap = d - t.mon.wdeg;
            if (gap % h_weight != 0)
                throw NonIntegralLiftError(
                    "term of W-degree " + std::to_string(t.mon.wdeg) +
                    " cannot be padded to degree " + std::to_string(d) +
                    " with a variable of weight " + std::to_string(h_weight));
            std::vector<int> exps = t.mon.exps;
            exps.push_back(static_cast<int>(gap / h_weight));
            terms.push_back(
                Term{make_monomial(std::move(exps), hring->weights), t.coeff});
        }
        hpolys.emplace_back(hring, Order::WGrevlex, std::move(terms));
    }
    return make_system(hring, std::move(hpolys));
}

bool is_affine_regular(const AffineSystem& F) {
    std::vector<Polynomial> tops;
    tops.reserve(F.polys.size());
    for (const Polynomial& f : F.polys) tops.push_back(top_component(f));
    return is_regular(make_system(F.ring, std::move(tops))).regular;
}

AffineSolveResult solve_affine(const AffineSystem& F, int h_weight,
                               long long d_max) {
    if (h_weight == 0) h_weight = F.h_weight;
    const Ring& ring = *F.ring;
    const WeightSystem& W = ring.weights;
    const int n = ring.nvars();
    const int m = static_cast<int>(F.polys.size());
    if (m > n)
        throw std::invalid_argument(
            "affine pipeline requires at most as many polynomials as "
            "variables");

    AffineSolveResult res;
    AffineSolveReport& rep = res.report;
    rep.h_weight = h_weight;
    rep.affine_regular = is_affine_regular(F);
    rep.truncation_sound = rep.affine_regular;

    if (d_max < 0) {
        d_max = std::max<long long>(W.max_weight(), h_weight);
        for (int i = 0; i < m; ++i) d_max += F.top_wdegs[i] - W.weight(i);
    }
    rep.d_max = d_max;

    const PolySystem hsys = homogenize(F, h_weight);
    F5Options opts;
    opts.d_max = d_max;
    opts.homog_var = n;  // the fresh variable sits last
    const F5Result run = matrix_f5(hsys, opts);
    rep.observed_dreg = run.basis.observed_dreg;
    rep.f5_ops = run.ops;
    rep.degree_falls = run.degree_falls;
    rep.reductions_to_zero = run.basis.reductions_to_zero;
    rep.degrees = run.degrees;

    // Specialize the homogenization variable to 1 and interreduce; with the
    // fresh variable last (least under W-grevlex) this yields a basis of
    // the affine ideal.
    std::vector<Polynomial> specialized;
    specialized.reserve(run.basis.polys.size());
    for (const Polynomial& f : run.basis.polys) {
        std::vector<Term> terms;
        terms.reserve(f.size());
        for (const Term& t : f.terms()) {
            std::vector<int> exps(t.mon.exps.begin(), t.mon.exps.end() - 1);
            terms.push_back(Term{make_monomial(std::move(exps), W), t.coeff});
        }
        specialized.emplace_back(F.ring, Order::WGrevlex, std::move(terms));
    }
    rep.wgrevlex_basis.order = Order::WGrevlex;
    rep.wgrevlex_basis.polys =
        interreduce(std::move(specialized), Order::WGrevlex);
    rep.wgrevlex_basis.truncation_wdeg = d_max;
    rep.wgrevlex_basis.reductions_to_zero = run.basis.reductions_to_zero;
    rep.wgrevlex_basis.observed_dreg = run.basis.observed_dreg;
    compute_staircase(rep.wgrevlex_basis, W);

    const QuotientBasis q = quotient_basis(rep.wgrevlex_basis);
    FGLMResult lex = fglm_to_lex(q);
    rep.fglm_ops = lex.ops;
    res.lex_basis = std::move(lex.basis);
    return res;
}

}  // namespace wgb
