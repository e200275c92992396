#include "wgb/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wgb/monomial.hpp"

namespace wgb {

namespace {

// Coefficients of prod (1 - t^{e}) over the given exponents.
std::vector<Int> product_one_minus(const std::vector<long long>& exps) {
    std::vector<Int> poly{1};
    for (long long e : exps) {
        if (e <= 0) throw std::invalid_argument("degrees must be positive");
        std::vector<Int> next(poly.size() + static_cast<std::size_t>(e), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + static_cast<std::size_t>(e)] -= poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

// In-place truncated division by (1 - t^w): multiplication by the geometric
// series, coeffs[d] += coeffs[d-w].
void divide_one_minus(std::vector<Int>& coeffs, long long w) {
    for (std::size_t d = static_cast<std::size_t>(w); d < coeffs.size(); ++d)
        coeffs[d] += coeffs[d - static_cast<std::size_t>(w)];
}

// Exact polynomial division num / den; remainder returned in num.
// den's trailing (highest-degree) coefficient must be +-1.
std::vector<Int> poly_divide(std::vector<Int> num, const std::vector<Int>& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) return {};
    std::vector<Int> quot(num.size() - dd, 0);
    for (std::size_t top = num.size(); top-- > dd;) {
        if (num[top] == 0) continue;
        const Int q = den[dd] == 1 ? num[top] : -num[top];
        quot[top - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j) num[top - dd + j] -= q * den[j];
    }
    // num now holds the remainder (degree < dd).
    bool exact = true;
    for (const Int& c : num)
        if (c != 0) exact = false;
    if (!exact) return {};
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
    return quot;
}

}  // namespace

HilbertSeries series_regular(const WeightSystem& W,
                             const std::vector<long long>& wdegrees,
                             long long truncation) {
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    HilbertSeries hs;
    std::vector<Int> num = product_one_minus(wdegrees);
    std::vector<long long> wexps(W.weights().begin(), W.weights().end());
    std::vector<Int> den = product_one_minus(wexps);

    if (static_cast<int>(wdegrees.size()) == W.nvars()) {
        std::vector<Int> quot = poly_divide(num, den);
        if (!quot.empty()) {
            hs.exact_polynomial = true;
            hs.coeffs = std::move(quot);
            if (static_cast<long long>(hs.coeffs.size()) <= truncation)
                hs.coeffs.resize(static_cast<std::size_t>(truncation) + 1, 0);
            return hs;
        }
    }
    num.resize(static_cast<std::size_t>(truncation) + 1, 0);
    for (int w : W.weights()) divide_one_minus(num, w);
    hs.coeffs = std::move(num);
    return hs;
}

HilbertSeries b_series(const WeightSystem& W,
                       const std::vector<long long>& wdegrees, int i,
                       long long truncation) {
    if (i < 1 || i > static_cast<int>(wdegrees.size()))
        throw std::invalid_argument("generator index out of range");
    if (truncation < 0) throw std::invalid_argument("negative truncation");
    std::vector<long long> head(wdegrees.begin(), wdegrees.begin() + (i - 1));
    std::vector<Int> num = product_one_minus(head);
    // Shift by z^{d_i}.
    const long long di = wdegrees[static_cast<std::size_t>(i) - 1];
    std::vector<Int> coeffs(static_cast<std::size_t>(truncation) + 1, 0);
    for (std::size_t k = 0; k < num.size(); ++k) {
        const long long d = di + static_cast<long long>(k);
        if (d <= truncation) coeffs[static_cast<std::size_t>(d)] = num[k];
    }
    for (int k = 0; k < i - 1; ++k) divide_one_minus(coeffs, W.weight(k));
    HilbertSeries hs;
    hs.coeffs = std::move(coeffs);
    return hs;
}

SystemProfile profile(const WeightSystem& W,
                      const std::vector<long long>& wdegrees) {
    SystemProfile p;
    p.n = W.nvars();
    p.m = static_cast<int>(wdegrees.size());
    if (p.m == 0 || p.m > p.n)
        throw std::invalid_argument("need 1 <= m <= n declared degrees");
    p.W = W;
    p.wdegrees = wdegrees;
    p.degree = Rat(1);
    p.partial_degrees.reserve(p.m);
    p.homogenized_degrees.reserve(p.m);
    Int hdeg = 1;
    for (int i = 0; i < p.m; ++i) {
        p.i_reg += wdegrees[i] - W.weight(i);
        p.degree *= Rat(Int(wdegrees[i]), Int(W.weight(i)));
        p.partial_degrees.push_back(p.degree);
        hdeg *= wdegrees[i];
        p.homogenized_degrees.push_back(hdeg);
    }
    p.dreg_bound = p.i_reg + W.max_weight();
    p.degree_integral = p.degree.denominator() == 1;
    return p;
}

namespace {

// d_reg bound for the first i generators: sum of (d_j - w_j) plus the
// largest of the first i weights.
long long dreg_prefix(const SystemProfile& p, int i) {
    long long s = 0;
    long long maxw = 0;
    for (int j = 0; j < i; ++j) {
        s += p.wdegrees[j] - p.W.weight(j);
        maxw = std::max<long long>(maxw, p.W.weight(j));
    }
    return s + maxw;
}

// x^omega for exact integral omega, ceiling of the float power otherwise.
Int int_pow(const Int& x, double omega) {
    const long long io = static_cast<long long>(omega);
    if (static_cast<double>(io) == omega && io >= 0) {
        Int r = 1;
        for (long long k = 0; k < io; ++k) r *= x;
        return r;
    }
    const long double v =
        std::pow(static_cast<long double>(x.convert_to<double>()),
                 static_cast<long double>(omega));
    return Int(static_cast<long long>(std::ceil(v)));
}

Rat rat_pow(const Rat& x, long long e) {
    Rat r(1);
    for (long long k = 0; k < e; ++k) r *= x;
    return r;
}

}  // namespace

BoundReport bounds(const SystemProfile& p, double omega) {
    BoundReport r;
    r.omega = omega;
    const int n = p.n;
    const int m = p.m;
    const long long io = static_cast<long long>(omega);
    const bool omega_integral = static_cast<double>(io) == omega && io >= 0;

    r.c_fglm = ceil_rat(Rat(Int(n)) * rat_pow(p.degree, 3));

    const long long dreg = p.dreg_bound;
    const Int m_dreg = count_monomials(dreg, p.W, n);
    r.c_f5_basic = Int(dreg) * int_pow(m_dreg, omega);

    const Rat upper = count_bounds(dreg, p.W).second;
    if (omega_integral) {
        r.c_f5_binomial = ceil_rat(Rat(Int(dreg)) * rat_pow(upper, io));
    } else {
        const long double u = static_cast<long double>(
            upper.numerator().convert_to<double>() /
            upper.denominator().convert_to<double>());
        r.c_f5_binomial = Int(static_cast<long long>(
            std::ceil(static_cast<long double>(dreg) * std::pow(u, omega))));
    }

    // Refined sum; the i = 1 term is empty (a single generator performs no
    // reductions), and D_0 = 0 by convention.
    Rat refined(0);
    for (int i = 2; i <= m; ++i) {
        const Rat d_prev = p.partial_degrees[static_cast<std::size_t>(i) - 2];
        const Rat d_prev2 = i >= 3
                                ? p.partial_degrees[static_cast<std::size_t>(i) - 3]
                                : Rat(0);
        const long long dri = dreg_prefix(p, i);
        refined += (d_prev - d_prev2) * Rat(count_monomials(dri, p.W, i)) *
                   Rat(count_monomials(dri, p.W, n));
    }
    r.c_f5_refined = ceil_rat(refined);

    // Same sum on the embedded unit-weight system.
    Int hom(0);
    for (int i = 2; i <= m; ++i) {
        const Int d_prev = p.homogenized_degrees[static_cast<std::size_t>(i) - 2];
        const Int d_prev2 =
            i >= 3 ? p.homogenized_degrees[static_cast<std::size_t>(i) - 3]
                   : Int(0);
        long long dri = 1;
        for (int j = 0; j < i; ++j) dri += p.wdegrees[j] - 1;
        hom += (d_prev - d_prev2) * count_monomials_unit(dri, i) *
               count_monomials_unit(dri, n);
    }
    r.c_f5_hom = hom;

    // b-series refinement, truncated at the regularity bound.
    Rat bdi(0);
    const std::vector<long long>& s = p.W.s_values();
    for (int i = 1; i <= m - 1; ++i) {
        const HilbertSeries b = b_series(p.W, p.wdegrees, i + 1, dreg);
        const Int denom =
            Int(p.W.prefix_product(i)) * Int(p.W.prefix_product(n - 1));
        for (long long e = p.wdegrees[static_cast<std::size_t>(i)]; e <= dreg;
             ++e) {
            const Int be = b.coeff(e);
            if (be == 0) continue;
            bdi += Rat(be, denom) * Rat(count_monomials_unit(e + s[i] - i, i + 1)) *
                   Rat(count_monomials_unit(e + s[n - 1] - n + 1, n));
        }
    }
    r.c_f5_bdi = ceil_rat(bdi);

    return r;
}

}  // namespace wgb
