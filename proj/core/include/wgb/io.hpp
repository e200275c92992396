#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wgb/hilbert.hpp"
#include "wgb/matrix_f5.hpp"

namespace wgb {

// A parsed system or basis file.  Header lines: `p <prime>`,
// `vars <n> [names...]`, `weights w1 .. wn`, then (basis files only)
// `order lex|wgrevlex` and `truncation <d>`, then one polynomial per line.
// Terms are ` + `-separated, each `c*e1,e2,...,en`; `#` starts a comment.
struct ParsedSystem {
    RingPtr ring;
    std::vector<Polynomial> polys;
    bool has_order = false;
    Order order = Order::WGrevlex;
    bool has_truncation = false;
    long long truncation = 0;
};

ParsedSystem parse_system(std::istream& in);
ParsedSystem parse_system_text(const std::string& text);
ParsedSystem parse_system_file(const std::string& path);

std::string format_system(const RingPtr& ring,
                          const std::vector<Polynomial>& polys);
std::string format_basis(const RingPtr& ring, const GroebnerBasis& basis);

// `num/den`, or just the numerator when integral.
std::string rat_string(const Rat& r);

// Prediction report: the profile quantities and the operation-count
// estimates, every big value as a decimal string.
std::string profile_json(const SystemProfile& prof, const BoundReport& rep);
std::string profile_csv(const SystemProfile& prof, const BoundReport& rep);

}  // namespace wgb
