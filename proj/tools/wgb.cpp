#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wgb/affine.hpp"
#include "wgb/bench.hpp"
#include "wgb/buchberger.hpp"
#include "wgb/errors.hpp"
#include "wgb/fglm.hpp"
#include "wgb/hilbert.hpp"
#include "wgb/io.hpp"
#include "wgb/matrix_f5.hpp"
#include "wgb/structure.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) +
                                       ": bad integer `" + tok + "`");
        }
    }
    if (out.empty())
        throw CLI::ValidationError(std::string(what) + ": empty list");
    return out;
}

std::vector<long long> to_ll(const std::vector<int>& v) {
    return std::vector<long long>(v.begin(), v.end());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write `" + path + "`");
    out << text;
}

std::vector<wgb::Polynomial> in_wgrevlex(std::vector<wgb::Polynomial> polys) {
    for (auto& f : polys)
        if (f.order() != wgb::Order::WGrevlex)
            f = f.resorted(wgb::Order::WGrevlex);
    return polys;
}

int cmd_predict(const std::string& file, const std::string& weights_str,
                const std::string& degrees_str, double omega, bool csv) {
    wgb::WeightSystem W({1});
    std::vector<long long> degrees;
    if (!file.empty()) {
        wgb::ParsedSystem sys = wgb::parse_system_file(file);
        if (sys.polys.empty())
            throw std::runtime_error("`" + file + "` has no polynomials");
        const wgb::PolySystem F =
            wgb::make_system(sys.ring, in_wgrevlex(sys.polys));
        W = F.ring->weights;
        degrees = F.wdegrees;
    } else {
        if (weights_str.empty() || degrees_str.empty())
            throw std::runtime_error(
                "pass a system file or both --weights and --degrees");
        W = wgb::WeightSystem(parse_int_list(weights_str, "--weights"));
        degrees = to_ll(parse_int_list(degrees_str, "--degrees"));
    }
    const wgb::SystemProfile prof = wgb::profile(W, degrees);
    const wgb::BoundReport rep = wgb::bounds(prof, omega);
    std::cout << (csv ? wgb::profile_csv(prof, rep)
                      : wgb::profile_json(prof, rep));
    return 0;
}

int cmd_solve(const std::string& file, const std::string& order,
              const std::string& strategy, bool affine, long long dmax,
              const std::string& output, const std::string& degree_csv_path) {
    wgb::ParsedSystem sys = wgb::parse_system_file(file);
    if (sys.polys.empty())
        throw std::runtime_error("`" + file + "` has no polynomials");
    std::vector<wgb::Polynomial> polys = in_wgrevlex(sys.polys);
    const bool want_lex = order == "lex";

    if (affine) {
        const wgb::AffineSystem F = wgb::make_affine(sys.ring, polys);
        if (!wgb::is_affine_regular(F))
            std::cerr << "warning: top components are not a regular "
                         "sequence; the truncated run may miss basis "
                         "elements\n";
        const wgb::AffineSolveResult res = wgb::solve_affine(F, 0, dmax);
        const wgb::AffineSolveReport& r = res.report;
        std::cerr << "h_weight: " << r.h_weight << "\nd_max: " << r.d_max
                  << "\nobserved_dreg: " << r.observed_dreg
                  << "\nf5_ops: " << r.f5_ops
                  << "\ndegree_falls: " << r.degree_falls
                  << "\nreductions_to_zero: " << r.reductions_to_zero
                  << "\nfglm_ops: " << r.fglm_ops << "\ntruncation_sound: "
                  << (r.truncation_sound ? "true" : "false") << '\n';
        if (!degree_csv_path.empty()) {
            wgb::F5Result stats;
            stats.degrees = r.degrees;
            write_output(degree_csv_path, wgb::degree_csv(stats));
        }
        write_output(output,
                     wgb::format_basis(sys.ring, want_lex
                                                     ? res.lex_basis
                                                     : r.wgrevlex_basis));
        return 0;
    }

    const wgb::PolySystem F = wgb::make_system(sys.ring, std::move(polys));
    if (!F.whomogeneous)
        throw std::runtime_error(
            "input is not weighted homogeneous; pass --affine");
    wgb::F5Options opts;
    opts.d_max = dmax;
    const wgb::F5Result res = strategy == "std" ? wgb::matrix_f5_hom(F, opts)
                                                : wgb::matrix_f5(F, opts);
    std::cerr << "strategy: " << strategy << "\nf5_ops: " << res.ops
              << "\nrejected: " << res.rejected << "\nreductions_to_zero: "
              << res.basis.reductions_to_zero
              << "\nobserved_dreg: " << res.basis.observed_dreg
              << "\nbasis_size: " << res.basis.polys.size() << '\n';
    if (!degree_csv_path.empty())
        write_output(degree_csv_path, wgb::degree_csv(res));

    if (!want_lex) {
        write_output(output, wgb::format_basis(sys.ring, res.basis));
        return 0;
    }
    if (!res.basis.zero_dimensional)
        throw std::runtime_error(
            "the ideal is not zero-dimensional: the leading terms contain "
            "no pure power of some variable, so the Lex change of order "
            "is unavailable (use --order wgrevlex)");
    const wgb::QuotientBasis q = wgb::quotient_basis(res.basis);
    const wgb::FGLMResult lex = wgb::fglm_to_lex(q);
    std::cerr << "quotient_dim: " << q.staircase.size()
              << "\nfglm_ops: " << lex.ops << '\n';
    write_output(output, wgb::format_basis(sys.ring, lex.basis));
    return 0;
}

int cmd_check(const std::string& file) {
    wgb::ParsedSystem sys = wgb::parse_system_file(file);
    if (sys.polys.empty())
        throw std::runtime_error("`" + file + "` has no polynomials");
    const wgb::PolySystem F =
        wgb::make_system(sys.ring, in_wgrevlex(sys.polys));
    nlohmann::ordered_json j;
    j["whomogeneous"] = F.whomogeneous;
    const bool square_or_under = F.npolys() <= F.nvars();
    if (F.whomogeneous && square_or_under) {
        const wgb::RegularityReport r = wgb::is_regular(F);
        j["regular"] = r.regular;
        j["witness_degree"] = r.witness_degree;
        j["reductions_to_zero"] = r.reductions_to_zero;
        j["noether_position"] = wgb::is_noether_position(F);
    } else if (!F.whomogeneous && square_or_under) {
        const wgb::AffineSystem A = wgb::make_affine(F.ring, F.polys);
        j["affine_regular"] = wgb::is_affine_regular(A);
        j["h_weight"] = A.h_weight;
    }
    if (square_or_under) {
        const wgb::SystemProfile prof =
            wgb::profile(F.ring->weights, F.wdegrees);
        const wgb::BoundReport rep = wgb::bounds(prof);
        j["profile"] =
            nlohmann::ordered_json::parse(wgb::profile_json(prof, rep));
    }
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_gen(const std::string& weights_str, const std::string& degrees_str,
            std::uint64_t seed, std::uint32_t p, const std::string& shape) {
    const std::vector<int> weights = parse_int_list(weights_str, "--weights");
    const std::vector<long long> degrees =
        to_ll(parse_int_list(degrees_str, "--degrees"));
    const wgb::RingPtr ring = wgb::make_ring(p, weights);
    wgb::GenShape gs = wgb::GenShape::Whomog;
    if (shape == "whomog_plus_constant")
        gs = wgb::GenShape::WhomogPlusConstant;
    else if (shape == "affine_up_to_degree")
        gs = wgb::GenShape::AffineUpToDegree;
    const wgb::PolySystem F = wgb::gen_generic(ring, degrees, seed, gs);
    std::cout << wgb::format_system(ring, F.polys);
    return 0;
}

int cmd_bench(std::vector<std::string> configs, std::uint64_t seed,
              std::uint32_t p) {
    if (configs.empty())
        configs = {"1,1:3,3", "2,3:6,6", "2,2,1,1:4,4,4,4"};
    std::vector<wgb::BenchRow> rows;
    for (const std::string& cfg : configs) {
        const std::size_t colon = cfg.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("config `" + cfg +
                                     "` is not `w1,..,wn:d1,..,dn`");
        const std::vector<int> weights =
            parse_int_list(cfg.substr(0, colon), "config weights");
        const std::vector<long long> degrees =
            to_ll(parse_int_list(cfg.substr(colon + 1), "config degrees"));
        if (weights.size() != degrees.size())
            throw std::runtime_error("config `" + cfg +
                                     "`: need one degree per variable");
        const wgb::RingPtr ring = wgb::make_ring(p, weights);
        const wgb::PolySystem F =
            wgb::gen_generic(ring, degrees, seed, wgb::GenShape::Whomog);
        std::string label = "W";
        for (int w : weights) label += "-" + std::to_string(w);
        label += "_D";
        for (long long d : degrees) label += "-" + std::to_string(d);
        rows.push_back(wgb::run_bench(F, label));
        std::cerr << "done: " << rows.back().label << '\n';
    }
    std::cout << wgb::bench_csv(rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gröbner bases and cost prediction for quasi-homogeneous systems "
        "over a prime field"};
    app.require_subcommand(1);

    auto* predict = app.add_subcommand(
        "predict", "Hilbert-series profile and operation-count bounds");
    std::string predict_file, predict_weights, predict_degrees;
    double omega = 3.0;
    bool predict_csv = false;
    predict->add_option("file", predict_file, "system file");
    predict->add_option("--weights", predict_weights,
                        "comma-separated variable weights");
    predict->add_option("--degrees", predict_degrees,
                        "comma-separated generator W-degrees");
    predict->add_option("--omega", omega, "linear-algebra exponent")
        ->capture_default_str();
    predict->add_flag("--csv", predict_csv, "emit CSV instead of JSON");

    auto* solve = app.add_subcommand(
        "solve", "compute a Gröbner basis (basis to stdout or -o, run "
                 "report to stderr)");
    std::string solve_file, solve_order = "lex", solve_strategy = "qh";
    std::string solve_output, solve_degree_csv;
    bool solve_affine_flag = false;
    long long solve_dmax = -1;
    solve->add_option("file", solve_file, "system file")->required();
    solve->add_option("--order", solve_order, "target order")
        ->check(CLI::IsMember({"lex", "wgrevlex"}))
        ->capture_default_str();
    solve->add_option("--strategy", solve_strategy,
                      "qh: weighted run; std: run on the unit-weight image")
        ->check(CLI::IsMember({"qh", "std"}))
        ->capture_default_str();
    solve->add_flag("--affine", solve_affine_flag,
                    "homogenize a non-homogeneous input first");
    solve->add_option("--dmax", solve_dmax,
                      "truncation W-degree (default: regularity bound)");
    solve->add_option("-o,--output", solve_output, "basis output file");
    solve->add_option("--degree-csv", solve_degree_csv,
                      "write per-degree matrix statistics to this file");

    auto* check = app.add_subcommand(
        "check", "structural report: homogeneity, regularity, Noether "
                 "position, profile");
    std::string check_file;
    check->add_option("file", check_file, "system file")->required();

    auto* gen = app.add_subcommand("gen", "emit a seeded generic system");
    std::string gen_weights, gen_degrees, gen_shape = "whomog";
    std::uint64_t gen_seed = 1;
    std::uint32_t gen_p = 65521;
    gen->add_option("--weights", gen_weights, "comma-separated weights")
        ->required();
    gen->add_option("--degrees", gen_degrees, "comma-separated W-degrees")
        ->required();
    gen->add_option("--seed", gen_seed, "generator seed")
        ->capture_default_str();
    gen->add_option("--p", gen_p, "field characteristic")
        ->capture_default_str();
    gen->add_option("--shape", gen_shape, "polynomial shape")
        ->check(CLI::IsMember(
            {"whomog", "whomog_plus_constant", "affine_up_to_degree"}))
        ->capture_default_str();

    auto* bench = app.add_subcommand(
        "bench", "compare the weighted pipeline against the unit-weight one "
                 "on seeded generic systems (CSV to stdout)");
    std::vector<std::string> bench_configs;
    std::uint64_t bench_seed = 1;
    std::uint32_t bench_p = 65521;
    bench->add_option("configs", bench_configs,
                      "one or more `w1,..,wn:d1,..,dn`");
    bench->add_option("--seed", bench_seed, "generator seed")
        ->capture_default_str();
    bench->add_option("--p", bench_p, "field characteristic")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (predict->parsed())
            return cmd_predict(predict_file, predict_weights, predict_degrees,
                               omega, predict_csv);
        if (solve->parsed())
            return cmd_solve(solve_file, solve_order, solve_strategy,
                             solve_affine_flag, solve_dmax, solve_output,
                             solve_degree_csv);
        if (check->parsed()) return cmd_check(check_file);
        if (gen->parsed())
            return cmd_gen(gen_weights, gen_degrees, gen_seed, gen_p,
                           gen_shape);
        if (bench->parsed()) return cmd_bench(bench_configs, bench_seed,
                                              bench_p);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
