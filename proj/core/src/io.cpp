#include "wgb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wgb/errors.hpp"

namespace wgb {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

long long parse_ll(const std::string& tok, int line_no,
                   const std::string& what) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line_no, what + " must be a nonnegative decimal, got `" + tok +
                          "`");
    try {
        return std::stoll(tok);
    } catch (const std::exception&) {
        fail(line_no, what + " out of range: `" + tok + "`");
    }
}

Polynomial parse_poly(const std::string& line, int line_no,
                      const RingPtr& ring, Order order) {
    const int n = ring->nvars();
    const std::uint64_t p = ring->field.modulus();
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t next = line.find('+', pos);
        std::string piece = strip(
            line.substr(pos, next == std::string::npos ? next : next - pos));
        pos = next == std::string::npos ? line.size() + 1 : next + 1;
        if (piece.empty()) fail(line_no, "empty term");
        const std::size_t star = piece.find('*');
        if (star == std::string::npos)
            fail(line_no, "term `" + piece + "` lacks `coeff*exponents`");
        const std::uint64_t c = static_cast<std::uint64_t>(
            parse_ll(strip(piece.substr(0, star)), line_no, "coefficient"));
        std::vector<int> exps;
        exps.reserve(static_cast<std::size_t>(n));
        std::string rest = strip(piece.substr(star + 1));
        std::size_t epos = 0;
        while (epos <= rest.size()) {
            std::size_t comma = rest.find(',', epos);
            const std::string etok = strip(rest.substr(
                epos, comma == std::string::npos ? comma : comma - epos));
            epos = comma == std::string::npos ? rest.size() + 1 : comma + 1;
            exps.push_back(static_cast<int>(
                parse_ll(etok, line_no, "exponent")));
        }
        if (static_cast<int>(exps.size()) != n)
            fail(line_no, "term `" + piece + "` has " +
                              std::to_string(exps.size()) + " exponents, " +
                              "expected " + std::to_string(n));
        terms.push_back(Term{make_monomial(std::move(exps), ring->weights),
                             static_cast<std::uint32_t>(c % p)});
    }
    return Polynomial(ring, order, std::move(terms));
}

std::string poly_line(const Polynomial& f, int n) {
    if (f.is_zero()) {
        std::string z = "0*0";
        for (int k = 1; k < n; ++k) z += ",0";
        return z;
    }
    std::string out;
    for (std::size_t t = 0; t < f.terms().size(); ++t) {
        if (t) out += " + ";
        const Term& term = f.terms()[t];
        out += std::to_string(term.coeff);
        out += '*';
        for (std::size_t k = 0; k < term.mon.exps.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(term.mon.exps[k]);
        }
    }
    return out;
}

}  // namespace

ParsedSystem parse_system(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    for (int no = 1; std::getline(in, raw); ++no) {
        const std::string s = strip(raw);
        if (!s.empty()) lines.emplace_back(no, s);
    }
    std::size_t at = 0;
    auto next_line = [&](const std::string& what) -> std::pair<int,
                                                               std::string> {
        if (at >= lines.size())
            throw ParseError("unexpected end of input: missing " + what);
        return lines[at++];
    };

    auto [pno, pline] = next_line("`p <prime>`");
    std::vector<std::string> toks = split_ws(pline);
    if (toks.size() != 2 || toks[0] != "p")
        fail(pno, "expected `p <prime>`");
    const long long prime = parse_ll(toks[1], pno, "prime");

    auto [vno, vline] = next_line("`vars <n> [names...]`");
    toks = split_ws(vline);
    if (toks.size() < 2 || toks[0] != "vars") fail(vno, "expected `vars <n>`");
    const long long n = parse_ll(toks[1], vno, "variable count");
    if (n < 1) fail(vno, "need at least one variable");
    std::vector<std::string> names;
    if (toks.size() > 2) {
        if (static_cast<long long>(toks.size()) != 2 + n)
            fail(vno, "expected exactly " + std::to_string(n) + " names");
        names.assign(toks.begin() + 2, toks.end());
    }

    auto [wno, wline] = next_line("`weights w1 .. wn`");
    toks = split_ws(wline);
    if (toks.empty() || toks[0] != "weights")
        fail(wno, "expected `weights w1 .. wn`");
    if (static_cast<long long>(toks.size()) != 1 + n)
        fail(wno, "expected " + std::to_string(n) + " weights");
    std::vector<int> weights;
    for (long long k = 1; k <= n; ++k) {
        const long long w = parse_ll(toks[static_cast<std::size_t>(k)], wno,
                                     "weight");
        if (w < 1) fail(wno, "weights must be positive");
        weights.push_back(static_cast<int>(w));
    }

    ParsedSystem sys;
    try {
        sys.ring = make_ring(static_cast<std::uint32_t>(prime),
                             std::move(weights), std::move(names));
    } catch (const std::invalid_argument& e) {
        fail(pno, e.what());
    }

    while (at < lines.size()) {
        const auto& [no, line] = lines[at];
        toks = split_ws(line);
        if (toks[0] == "order") {
            if (toks.size() != 2 ||
                (toks[1] != "lex" && toks[1] != "wgrevlex"))
                fail(no, "expected `order lex|wgrevlex`");
            sys.has_order = true;
            sys.order = toks[1] == "lex" ? Order::Lex : Order::WGrevlex;
            ++at;
        } else if (toks[0] == "truncation") {
            if (toks.size() != 2) fail(no, "expected `truncation <d>`");
            sys.has_truncation = true;
            sys.truncation = parse_ll(toks[1], no, "truncation");
            ++at;
        } else {
            break;
        }
    }

    for (; at < lines.size(); ++at)
        sys.polys.push_back(
            parse_poly(lines[at].second, lines[at].first, sys.ring,
                       sys.order));
    return sys;
}

ParsedSystem parse_system_text(const std::string& text) {
    std::istringstream in(text);
    return parse_system(in);
}

ParsedSystem parse_system_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open `" + path + "`");
    return parse_system(in);
}

std::string format_system(const RingPtr& ring,
                          const std::vector<Polynomial>& polys) {
    std::ostringstream out;
    out << "p " << ring->field.modulus() << '\n';
    out << "vars " << ring->nvars();
    for (const std::string& name : ring->vars) out << ' ' << name;
    out << '\n';
    out << "weights";
    for (int w : ring->weights.weights()) out << ' ' << w;
    out << '\n';
    for (const Polynomial& f : polys)
        out << poly_line(f, ring->nvars()) << '\n';
    return out.str();
}

std::string format_basis(const RingPtr& ring, const GroebnerBasis& basis) {
    std::ostringstream out;
    out << "p " << ring->field.modulus() << '\n';
    out << "vars " << ring->nvars();
    for (const std::string& name : ring->vars) out << ' ' << name;
    out << '\n';
    out << "weights";
    for (int w : ring->weights.weights()) out << ' ' << w;
    out << '\n';
    out << "order " << (basis.order == Order::Lex ? "lex" : "wgrevlex")
        << '\n';
    out << "truncation " << basis.truncation_wdeg << '\n';
    for (const Polynomial& f : basis.polys)
        out << poly_line(f, ring->nvars()) << '\n';
    return out.str();
}

std::string rat_string(const Rat& r) {
    if (r.denominator() == 1) return r.numerator().str();
    return r.numerator().str() + "/" + r.denominator().str();
}

std::string profile_json(const SystemProfile& prof, const BoundReport& rep) {
    nlohmann::ordered_json j;
    j["n"] = prof.n;
    j["m"] = prof.m;
    j["weights"] = prof.W.weights();
    j["wdegrees"] = prof.wdegrees;
    j["degree"] = rat_string(prof.degree);
    j["degree_integral"] = prof.degree_integral;
    j["i_reg"] = prof.i_reg;
    j["dreg_bound"] = prof.dreg_bound;
    j["omega"] = rep.omega;
    j["c_fglm"] = rep.c_fglm.str();
    j["c_f5_basic"] = rep.c_f5_basic.str();
    j["c_f5_binomial"] = rep.c_f5_binomial.str();
    j["c_f5_refined"] = rep.c_f5_refined.str();
    j["c_f5_hom"] = rep.c_f5_hom.str();
    j["c_f5_bdi"] = rep.c_f5_bdi.str();
    return j.dump(2) + "\n";
}

std::string profile_csv(const SystemProfile& prof, const BoundReport& rep) {
    std::ostringstream out;
    out << "n,m,weights,wdegrees,degree,degree_integral,i_reg,dreg_bound,"
           "omega,c_fglm,c_f5_basic,c_f5_binomial,c_f5_refined,c_f5_hom,"
           "c_f5_bdi\n";
    out << prof.n << ',' << prof.m << ',';
    for (std::size_t k = 0; k < prof.W.weights().size(); ++k)
        out << (k ? " " : "") << prof.W.weights()[k];
    out << ',';
    for (std::size_t k = 0; k < prof.wdegrees.size(); ++k)
        out << (k ? " " : "") << prof.wdegrees[k];
    out << ',' << rat_string(prof.degree) << ','
        << (prof.degree_integral ? "true" : "false") << ',' << prof.i_reg
        << ',' << prof.dreg_bound << ',' << rep.omega << ','
        << rep.c_fglm.str() << ',' << rep.c_f5_basic.str() << ','
        << rep.c_f5_binomial.str() << ',' << rep.c_f5_refined.str() << ','
        << rep.c_f5_hom.str() << ',' << rep.c_f5_bdi.str() << '\n';
    return out.str();
}

}  // namespace wgb
