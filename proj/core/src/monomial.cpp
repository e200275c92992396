#include "wgb/monomial.hpp"

#include <algorithm>
#include <string>

#include "wgb/errors.hpp"

namespace wgb {

long long weighted_degree(const std::vector<int>& exps, const WeightSystem& W) {
    if (static_cast<int>(exps.size()) != W.nvars()) {
        throw DimensionMismatchError("exponent vector has " +
                                     std::to_string(exps.size()) +
                                     " entries, weights have " +
                                     std::to_string(W.nvars()));
    }
    long long d = 0;
    for (int i = 0; i < W.nvars(); ++i)
        d += static_cast<long long>(W.weight(i)) * exps[i];
    return d;
}

Monomial make_monomial(std::vector<int> exps, const WeightSystem& W) {
    Monomial m;
    m.wdeg = weighted_degree(exps, W);
    m.exps = std::move(exps);
    return m;
}

Monomial one_monomial(const WeightSystem& W) {
    return Monomial{std::vector<int>(W.nvars(), 0), 0};
}

int cmp_wgrevlex(const Monomial& a, const Monomial& b, const WeightSystem& W) {
    const int n = W.nvars();
    if (static_cast<int>(a.exps.size()) != n ||
        static_cast<int>(b.exps.size()) != n) {
        throw DimensionMismatchError("monomial dimension differs from weights");
    }
    if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg ? -1 : 1;
    for (int i = n - 1; i >= 0; --i) {
        const long long wa = static_cast<long long>(W.weight(i)) * a.exps[i];
        const long long wb = static_cast<long long>(W.weight(i)) * b.exps[i];
        // Larger entry nearest the end marks the smaller monomial.
        if (wa != wb) return wa > wb ? -1 : 1;
    }
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size())
        throw DimensionMismatchError("monomial dimensions differ");
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
    }
    return 0;
}

Monomial mul_monomial(const Monomial& a, const Monomial& b,
                      const WeightSystem& W) {
    if (a.exps.size() != b.exps.size())
        throw DimensionMismatchError("monomial dimensions differ");
    Monomial r;
    r.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] = a.exps[i] + b.exps[i];
    r.wdeg = a.wdeg + b.wdeg;
    (void)W;
    return r;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.exps.size() != b.exps.size()) return false;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] > b.exps[i]) return false;
    return true;
}

Monomial div_monomial(const Monomial& a, const Monomial& b,
                      const WeightSystem& W) {
    if (!divides(b, a))
        throw std::invalid_argument("monomial quotient is not a monomial");
    Monomial r;
    r.exps.resize(a.exps.size());
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        r.exps[i] = a.exps[i] - b.exps[i];
    r.wdeg = a.wdeg - b.wdeg;
    (void)W;
    return r;
}

int least_variable(const Monomial& m) {
    for (int i = static_cast<int>(m.exps.size()) - 1; i >= 0; --i)
        if (m.exps[i] > 0) return i;
    return -1;
}

namespace {

void enumerate_rec(long long d, int var, const WeightSystem& W,
                   std::vector<int>& exps, std::vector<Monomial>& out) {
    const int n = W.nvars();
    if (var == n - 1) {
        if (d % W.weight(var) == 0) {
            exps[var] = static_cast<int>(d / W.weight(var));
            out.push_back(make_monomial(exps, W));
            exps[var] = 0;
        }
        return;
    }
    const long long w = W.weight(var);
    for (long long e = 0; e * w <= d; ++e) {
        exps[var] = static_cast<int>(e);
        enumerate_rec(d - e * w, var + 1, W, exps, out);
    }
    exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_wdeg(long long d, const WeightSystem& W) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    std::vector<int> exps(W.nvars(), 0);
    enumerate_rec(d, 0, W, exps, out);
    std::sort(out.begin(), out.end(), [&W](const Monomial& a, const Monomial& b) {
        return cmp_wgrevlex(a, b, W) > 0;
    });
    return out;
}

Int count_monomials(long long d, const WeightSystem& W, int nvars) {
    if (nvars < 0 || nvars > W.nvars())
        throw DimensionMismatchError("nvars out of range");
    if (d < 0) return 0;
    if (nvars == 0) return d == 0 ? 1 : 0;
    // ways[e] = number of solutions of w_1 a_1 + ... + w_k a_k = e.
    std::vector<Int> ways(static_cast<std::size_t>(d) + 1, 0);
    ways[0] = 1;
    for (int k = 0; k < nvars; ++k) {
        const long long w = W.weight(k);
        for (long long e = w; e <= d; ++e) ways[e] += ways[e - w];
    }
    return ways[d];
}

Int count_monomials(long long d, const WeightSystem& W) {
    return count_monomials(d, W, W.nvars());
}

Int count_monomials_unit(long long d, int nvars) {
    if (d < 0) return 0;
    if (nvars <= 0) return d == 0 && nvars == 0 ? 1 : 0;
    // binom(d + nvars - 1, nvars - 1)
    Int num = 1;
    for (int i = 1; i <= nvars - 1; ++i) {
        num *= d + i;
        num /= i;
    }
    return num;
}

std::pair<Rat, Rat> count_bounds(long long d, const WeightSystem& W) {
    const int n = W.nvars();
    const Rat scale(Int(W.delta()), Int(W.product()));
    const long long s = W.s_values()[n - 1];
    const long long t = W.t_values()[n - 1];
    // Every W-degree is a multiple of delta, so degrees off that lattice
    // hold no monomials at all and the sharp lower bound is zero.
    Rat lower = d % W.delta() != 0
                    ? Rat(0)
                    : scale * Rat(count_monomials_unit(d - t - n + 1, n));
    Rat upper = scale * Rat(count_monomials_unit(d + s - n + 1, n));
    return {lower, upper};
}

Monomial hom_exponents(const Monomial& m, const WeightSystem& W) {
    if (static_cast<int>(m.exps.size()) != W.nvars())
        throw DimensionMismatchError("monomial dimension differs from weights");
    Monomial r;
    r.exps.resize(m.exps.size());
    long long total = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        r.exps[i] = m.exps[i] * W.weight(static_cast<int>(i));
        total += r.exps[i];
    }
    r.wdeg = total;
    return r;
}

Monomial dehom_exponents(const Monomial& m, const WeightSystem& W) {
    if (static_cast<int>(m.exps.size()) != W.nvars())
        throw DimensionMismatchError("monomial dimension differs from weights");
    Monomial r;
    r.exps.resize(m.exps.size());
    long long total = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        const int w = W.weight(static_cast<int>(i));
        if (m.exps[i] % w != 0) {
            throw NotInImageError("exponent " + std::to_string(m.exps[i]) +
                                  " of variable " + std::to_string(i + 1) +
                                  " is not divisible by weight " +
                                  std::to_string(w));
        }
        r.exps[i] = m.exps[i] / w;
        total += static_cast<long long>(r.exps[i]) * w;
    }
    r.wdeg = total;
    return r;
}

}  // namespace wgb
