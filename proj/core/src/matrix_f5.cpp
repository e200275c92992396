#include "wgb/matrix_f5.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "wgb/buchberger.hpp"

namespace wgb {

namespace {

struct EchelonRow {
    int gen = 0;
    Monomial label;
    std::vector<std::uint32_t> coeffs;
    int pivot = -1;  // column index; -1 marks a zero row
};

// One echelonized Macaulay matrix.  Rows stay in signature order (generator
// index, then label ascending under W-grevlex); M_{d,i} is the prefix of
// rows with gen <= i, so pivot ownership per generator prefix is exact.
struct DegreeMatrix {
    std::vector<Monomial> columns;  // descending W-grevlex
    std::unordered_map<Monomial, int, MonomialHash> col_index;
    std::vector<EchelonRow> rows;
    std::unordered_map<Monomial, int, MonomialHash> pivot_owner;
};

Monomial variable_monomial(int k, const WeightSystem& W) {
    std::vector<int> exps(static_cast<std::size_t>(W.nvars()), 0);
    exps[static_cast<std::size_t>(k)] = 1;
    return make_monomial(std::move(exps), W);
}

}  // namespace

void compute_staircase(GroebnerBasis& g, const WeightSystem& W) {
    g.zero_dimensional = false;
    g.staircase.clear();
    const int n = W.nvars();
    std::vector<Monomial> lts;
    lts.reserve(g.polys.size());
    for (const Polynomial& f : g.polys) {
        lts.push_back(f.leading_monomial());
        if (lts.back().is_one()) {  // unit ideal: empty staircase
            g.zero_dimensional = true;
            return;
        }
    }
    for (int k = 0; k < n; ++k) {
        bool pure_power = false;
        for (const Monomial& lt : lts) {
            bool only_k = lt.exps[static_cast<std::size_t>(k)] > 0;
            for (int j = 0; only_k && j < n; ++j)
                if (j != k && lt.exps[static_cast<std::size_t>(j)] > 0)
                    only_k = false;
            if (only_k) {
                pure_power = true;
                break;
            }
        }
        if (!pure_power) return;  // quotient not finite-dimensional
    }
    g.zero_dimensional = true;
    auto standard = [&](const Monomial& m) {
        for (const Monomial& lt : lts)
            if (divides(lt, m)) return false;
        return true;
    };
    std::unordered_set<Monomial, MonomialHash> seen;
    std::deque<Monomial> queue;
    seen.insert(one_monomial(W));
    queue.push_back(one_monomial(W));
    while (!queue.empty()) {
        Monomial m = std::move(queue.front());
        queue.pop_front();
        for (int k = 0; k < n; ++k) {
            Monomial child = mul_monomial(m, variable_monomial(k, W), W);
            if (seen.count(child) || !standard(child)) continue;
            seen.insert(child);
            queue.push_back(child);
        }
    }
    g.staircase.assign(seen.begin(), seen.end());
    std::sort(g.staircase.begin(), g.staircase.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return cmp_wgrevlex(a, b, W) < 0;
              });
}

F5Result matrix_f5(const PolySystem& F, const F5Options& opts) {
    if (F.polys.empty())
        throw std::invalid_argument("matrix_f5 requires a nonempty system");
    if (!F.whomogeneous)
        throw std::invalid_argument(
            "matrix_f5 requires weighted homogeneous input");
    const Ring& ring = *F.ring;
    const WeightSystem& W = ring.weights;
    const PrimeField& field = ring.field;
    const std::uint64_t p = field.modulus();
    const int n = W.nvars();
    const int m = F.npolys();

    long long d_max = opts.d_max;
    if (d_max < 0) {
        if (m > n)
            throw std::invalid_argument(
                "pass an explicit d_max for overdetermined systems");
        d_max = W.max_weight();
        for (int i = 0; i < m; ++i) d_max += F.wdegrees[i] - W.weight(i);
    }

    F5Result res;
    res.basis.order = Order::WGrevlex;
    res.basis.truncation_wdeg = d_max;

    std::vector<Polynomial> basis_raw;
    std::vector<Monomial> basis_lts;
    std::map<long long, DegreeMatrix> archive;

    const long long d_min =
        *std::min_element(F.wdegrees.begin(), F.wdegrees.end());
    for (long long d = d_min; d <= d_max; ++d) {
        DegreeMatrix M;
        M.columns = monomials_of_wdeg(d, W);
        if (M.columns.empty()) continue;
        const std::size_t C = M.columns.size();
        M.col_index.reserve(C);
        for (std::size_t j = 0; j < C; ++j)
            M.col_index.emplace(M.columns[j], static_cast<int>(j));

        DegreeStats stats;
        stats.wdeg = d;
        stats.cols = C;

        // Column shift maps: source column j of degree d - w_k maps to the
        // column of x_k times that monomial.
        std::vector<std::vector<int>> shift(static_cast<std::size_t>(n));

        std::vector<EchelonRow> pending;
        for (int i = 0; i < m; ++i) {
            const long long di = F.wdegrees[i];
            if (d < di) continue;
            if (d == di) {
                EchelonRow row;
                row.gen = i;
                row.label = one_monomial(W);
                row.coeffs.assign(C, 0);
                for (const Term& t : F.polys[i].terms())
                    row.coeffs[static_cast<std::size_t>(M.col_index.at(t.mon))] =
                        t.coeff;
                pending.push_back(std::move(row));
                continue;
            }
            std::vector<EchelonRow> fresh;
            for (int k = 0; k < n; ++k) {
                auto src_it = archive.find(d - W.weight(k));
                if (src_it == archive.end()) continue;
                const DegreeMatrix& src = src_it->second;
                const Monomial xk = variable_monomial(k, W);
                auto& map_k = shift[static_cast<std::size_t>(k)];
                if (map_k.empty()) {
                    map_k.resize(src.columns.size());
                    for (std::size_t j = 0; j < src.columns.size(); ++j)
                        map_k[j] =
                            M.col_index.at(mul_monomial(src.columns[j], xk, W));
                }
                for (const EchelonRow& parent : src.rows) {
                    if (parent.gen != i) continue;
                    // Unique decomposition: x_k strips the least variable of
                    // the child label, so the parent's least variable may not
                    // exceed k.
                    if (least_variable(parent.label) > k) continue;
                    Monomial label = mul_monomial(parent.label, xk, W);
                    if (opts.use_criterion) {
                        auto prior = archive.find(d - di);
                        if (prior != archive.end()) {
                            auto owner = prior->second.pivot_owner.find(label);
                            if (owner != prior->second.pivot_owner.end() &&
                                owner->second < i) {
                                ++stats.rejected;
                                continue;
                            }
                        }
                    }
                    EchelonRow row;
                    row.gen = i;
                    row.label = std::move(label);
                    row.coeffs.assign(C, 0);
                    for (std::size_t j = 0; j < parent.coeffs.size(); ++j)
                        if (parent.coeffs[j])
                            row.coeffs[static_cast<std::size_t>(map_k[j])] =
                                parent.coeffs[j];
                    fresh.push_back(std::move(row));
                }
            }
            std::sort(fresh.begin(), fresh.end(),
                      [&](const EchelonRow& a, const EchelonRow& b) {
                          return cmp_wgrevlex(a.label, b.label, W) < 0;
                      });
            for (auto& row : fresh) pending.push_back(std::move(row));
        }

        M.rows = std::move(pending);
        stats.rows = M.rows.size();

        // No-swap elimination in signature order: one left-to-right sweep
        // per row against the pivots owned by earlier rows.
        std::vector<int> pivot_row_of_col(C, -1);
        for (std::size_t r = 0; r < M.rows.size(); ++r) {
            EchelonRow& row = M.rows[r];
            bool was_nonzero = false;
            for (std::uint32_t v : row.coeffs)
                if (v) {
                    was_nonzero = true;
                    break;
                }
            int pivot = -1;
            for (std::size_t c = 0; c < C; ++c) {
                const std::uint32_t v = row.coeffs[c];
                if (!v) continue;
                const int pr = pivot_row_of_col[c];
                if (pr < 0) {
                    pivot = static_cast<int>(c);
                    break;
                }
                const std::vector<std::uint32_t>& prow = M.rows
                    [static_cast<std::size_t>(pr)].coeffs;
                const std::uint64_t mult = p - v;  // pivot rows are monic
                row.coeffs[c] = 0;
                for (std::size_t j = c + 1; j < C; ++j)
                    row.coeffs[j] = static_cast<std::uint32_t>(
                        (row.coeffs[j] + mult * prow[j]) % p);
                stats.ops += C - c - 1;
            }
            if (pivot < 0) {
                if (was_nonzero) ++stats.zero_reductions;
                continue;
            }
            const std::size_t pc = static_cast<std::size_t>(pivot);
            const std::uint64_t inv = field.inv(row.coeffs[pc]);
            row.coeffs[pc] = 1;
            for (std::size_t j = pc + 1; j < C; ++j)
                row.coeffs[j] =
                    static_cast<std::uint32_t>(row.coeffs[j] * inv % p);
            stats.ops += C - pc - 1;
            row.pivot = pivot;
            pivot_row_of_col[pc] = static_cast<int>(r);
            M.pivot_owner.emplace(M.columns[pc], row.gen);

            const Monomial& pmon = M.columns[pc];
            bool covered = false;
            for (const Monomial& lt : basis_lts)
                if (divides(lt, pmon)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                std::vector<Term> terms;
                for (std::size_t j = pc; j < C; ++j)
                    if (row.coeffs[j]) terms.push_back({M.columns[j],
                                                        row.coeffs[j]});
                basis_raw.emplace_back(F.ring, Order::WGrevlex,
                                       std::move(terms));
                basis_lts.push_back(pmon);
                ++stats.new_basis;
                res.basis.observed_dreg = d;
                if (opts.homog_var >= 0 &&
                    pmon.exps[static_cast<std::size_t>(opts.homog_var)] > 0)
                    ++stats.degree_falls;
            }
        }

        res.ops += stats.ops;
        res.rejected += stats.rejected;
        res.degree_falls += stats.degree_falls;
        res.basis.reductions_to_zero += stats.zero_reductions;
        res.degrees.push_back(stats);
        archive.emplace(d, std::move(M));
    }

    res.basis.polys = interreduce(std::move(basis_raw), Order::WGrevlex);
    compute_staircase(res.basis, W);
    return res;
}

F5Result matrix_f5_hom(const PolySystem& F, const F5Options& opts) {
    if (F.polys.empty())
        throw std::invalid_argument("matrix_f5_hom requires a nonempty system");
    if (!F.whomogeneous)
        throw std::invalid_argument(
            "matrix_f5_hom requires weighted homogeneous input");
    const RingPtr uring = unit_weight_ring(F.ring);
    std::vector<Polynomial> images;
    images.reserve(F.polys.size());
    for (const Polynomial& f : F.polys) images.push_back(hom_w(f, uring));
    F5Result res = matrix_f5(make_system(uring, std::move(images)), opts);

    // The embedding is an order isomorphism, so the mapped-back list keeps
    // its ascending-leading-monomial sorting and its reducedness.
    std::vector<Polynomial> back;
    back.reserve(res.basis.polys.size());
    for (const Polynomial& f : res.basis.polys)
        back.push_back(dehom_w(f, F.ring));
    res.basis.polys = std::move(back);
    compute_staircase(res.basis, F.ring->weights);
    return res;
}

std::string degree_csv(const F5Result& result) {
    std::ostringstream out;
    out << "degree,rows,cols,ops,new_polys\n";
    for (const DegreeStats& s : result.degrees)
        out << s.wdeg << ',' << s.rows << ',' << s.cols << ',' << s.ops << ','
            << s.new_basis << '\n';
    return out.str();
}

}  // namespace wgb
