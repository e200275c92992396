#include "wgb/fglm.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wgb/errors.hpp"

namespace wgb {

QuotientBasis quotient_basis(const GroebnerBasis& g) {
    if (!g.zero_dimensional)
        throw DimensionPositiveError(
            "quotient is not finite-dimensional: some variable has no pure "
            "power among the leading terms");
    if (g.polys.empty())
        throw DimensionPositiveError("empty basis spans no finite quotient");
    QuotientBasis q;
    q.ring = g.polys.front().ring();
    q.staircase = g.staircase;
    const Ring& ring = *q.ring;
    const int n = ring.nvars();
    const std::size_t D = q.staircase.size();

    std::unordered_map<Monomial, int, MonomialHash> index;
    index.reserve(D);
    for (std::size_t j = 0; j < D; ++j)
        index.emplace(q.staircase[j], static_cast<int>(j));

    q.mul_maps.assign(static_cast<std::size_t>(n), {});
    for (int k = 0; k < n; ++k) {
        auto& columns = q.mul_maps[static_cast<std::size_t>(k)];
        columns.assign(D, {});
        std::vector<int> xk(static_cast<std::size_t>(n), 0);
        xk[static_cast<std::size_t>(k)] = 1;
        const Monomial var = make_monomial(std::move(xk), ring.weights);
        for (std::size_t j = 0; j < D; ++j) {
            columns[j].assign(D, 0);
            const Monomial prod =
                mul_monomial(q.staircase[j], var, ring.weights);
            auto hit = index.find(prod);
            if (hit != index.end()) {  // product is standard: coordinate 1
                columns[j][static_cast<std::size_t>(hit->second)] = 1;
                continue;
            }
            const Polynomial nf = normal_form(
                Polynomial(q.ring, g.order, {Term{prod, 1}}), g.polys);
            for (const Term& t : nf.terms())
                columns[j][static_cast<std::size_t>(index.at(t.mon))] =
                    t.coeff;
        }
    }
    return q;
}

FGLMResult fglm_to_lex(const QuotientBasis& q) {
    const Ring& ring = *q.ring;
    const PrimeField& field = ring.field;
    const std::uint64_t p = field.modulus();
    const int n = ring.nvars();
    const std::size_t D = q.staircase.size();

    FGLMResult res;
    res.basis.order = Order::Lex;
    res.basis.zero_dimensional = true;

    if (D == 0) {  // unit ideal
        res.basis.polys = {constant_polynomial(q.ring, 1, Order::Lex)};
        return res;
    }

    // Accepted monomials form the Lex staircase; coords[t] holds the t-th
    // one's true coordinates over the source staircase.
    std::vector<Monomial> accepted;
    std::vector<std::vector<std::uint32_t>> coords;
    std::unordered_map<Monomial, std::size_t, MonomialHash> accepted_index;
    // Elimination rows over the coordinate space; combos[s] expresses row s
    // as a combination of the accepted monomials.
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::vector<std::uint32_t>> combos;
    std::vector<int> row_of_pivot(D, -1);
    std::vector<Monomial> lex_lts;

    auto lex_after = [](const Monomial& a, const Monomial& b) {
        return cmp_lex(a, b) > 0;
    };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(lex_after)>
        pending(lex_after);
    std::unordered_set<Monomial, MonomialHash> pushed;
    const Monomial unit = one_monomial(ring.weights);
    pending.push(unit);
    pushed.insert(unit);

    while (!pending.empty()) {
        const Monomial mono = pending.top();
        pending.pop();
        bool pruned = false;
        for (const Monomial& lt : lex_lts)
            if (divides(lt, mono)) {
                pruned = true;
                break;
            }
        if (pruned) continue;

        // Quotient coordinates: the unit directly, anything else through a
        // multiplication map applied to its already-accepted parent (every
        // proper divisor of an unpruned candidate was accepted).
        std::vector<std::uint32_t> v(D, 0);
        if (mono.is_one()) {
            v[0] = 1;  // staircase[0] is the unit
        } else {
            const int k = least_variable(mono);
            std::vector<int> pexps = mono.exps;
            --pexps[static_cast<std::size_t>(k)];
            const std::size_t pt = accepted_index.at(
                make_monomial(std::move(pexps), ring.weights));
            const auto& w = coords[pt];
            const auto& mul = q.mul_maps[static_cast<std::size_t>(k)];
            for (std::size_t j = 0; j < D; ++j) {
                if (!w[j]) continue;
                const std::uint64_t c = w[j];
                const auto& column = mul[j];
                for (std::size_t r = 0; r < D; ++r)
                    v[r] = static_cast<std::uint32_t>((v[r] + c * column[r]) %
                                                      p);
                res.ops += D;
            }
        }
        const std::vector<std::uint32_t> original = v;

        // Reduce, maintaining v = coords(mono) - sum combo[t]*coords[t].
        std::vector<std::uint32_t> combo(D, 0);
        int pivot = -1;
        for (std::size_t c = 0; c < D; ++c) {
            const std::uint32_t value = v[c];
            if (!value) continue;
            const int s = row_of_pivot[c];
            if (s < 0) {
                pivot = static_cast<int>(c);
                break;
            }
            const auto& row = rows[static_cast<std::size_t>(s)];
            const auto& rc = combos[static_cast<std::size_t>(s)];
            const std::uint64_t mult = p - value;
            v[c] = 0;
            for (std::size_t j = c + 1; j < D; ++j)
                v[j] = static_cast<std::uint32_t>((v[j] + mult * row[j]) % p);
            for (std::size_t t = 0; t < accepted.size(); ++t)
                combo[t] = static_cast<std::uint32_t>(
                    (combo[t] + static_cast<std::uint64_t>(value) * rc[t]) %
                    p);
            res.ops += (D - c - 1) + accepted.size();
        }

        if (pivot < 0) {
            // Dependency: mono minus the accepted combination lies in the
            // ideal, with Lex leading monomial mono.
            std::vector<Term> terms;
            terms.push_back(Term{mono, 1});
            for (std::size_t t = 0; t < accepted.size(); ++t)
                if (combo[t])
                    terms.push_back(Term{accepted[t], field.neg(combo[t])});
            res.basis.polys.emplace_back(q.ring, Order::Lex,
                                         std::move(terms));
            lex_lts.push_back(mono);
            continue;
        }

        // Independent: mono joins the Lex staircase.  The stored row is the
        // monic reduced vector; its combination is inv*mono - inv*combo.
        const std::size_t pc = static_cast<std::size_t>(pivot);
        const std::uint64_t inv = field.inv(v[pc]);
        std::vector<std::uint32_t> row(D, 0);
        row[pc] = 1;
        for (std::size_t j = pc + 1; j < D; ++j)
            row[j] = static_cast<std::uint32_t>(v[j] * inv % p);
        std::vector<std::uint32_t> rc(D, 0);
        for (std::size_t t = 0; t < accepted.size(); ++t)
            if (combo[t])
                rc[t] = static_cast<std::uint32_t>(
                    (p - combo[t]) * inv % p);
        res.ops += (D - pc - 1) + accepted.size();
        rc[accepted.size()] = static_cast<std::uint32_t>(inv);
        row_of_pivot[pc] = static_cast<int>(rows.size());
        rows.push_back(std::move(row));
        combos.push_back(std::move(rc));
        accepted_index.emplace(mono, accepted.size());
        accepted.push_back(mono);
        coords.push_back(original);
        if (accepted.size() > D)
            throw std::logic_error("staircase overflow in change of order");
        for (int k = 0; k < n; ++k) {
            std::vector<int> cexps = mono.exps;
            ++cexps[static_cast<std::size_t>(k)];
            Monomial child = make_monomial(std::move(cexps), ring.weights);
            if (pushed.insert(child).second) pending.push(std::move(child));
        }
    }

    res.basis.truncation_wdeg = 0;
    for (const Polynomial& f : res.basis.polys)
        res.basis.truncation_wdeg =
            std::max(res.basis.truncation_wdeg, top_wdeg(f));
    res.basis.staircase = std::move(accepted);
    std::sort(res.basis.staircase.begin(), res.basis.staircase.end(),
              [](const Monomial& a, const Monomial& b) {
                  return cmp_lex(a, b) < 0;
              });
    return res;
}

}  // namespace wgb
