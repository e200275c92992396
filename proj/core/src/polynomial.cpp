#include "wgb/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "wgb/errors.hpp"

namespace wgb {

Ring::Ring(PrimeField f, WeightSystem w, std::vector<std::string> names)
    : field(f), weights(std::move(w)), vars(std::move(names)) {
    if (vars.empty()) vars = default_var_names(weights.nvars());
    if (static_cast<int>(vars.size()) != weights.nvars())
        throw DimensionMismatchError("variable name count differs from weights");
}

std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

RingPtr make_ring(std::uint32_t p, std::vector<int> weights,
                  std::vector<std::string> names) {
    return std::make_shared<const Ring>(PrimeField(p),
                                        WeightSystem(std::move(weights)),
                                        std::move(names));
}

Polynomial::Polynomial(RingPtr ring, Order order)
    : ring_(std::move(ring)), order_(order) {}

Polynomial::Polynomial(RingPtr ring, Order order, std::vector<Term> terms)
    : ring_(std::move(ring)), order_(order) {
    const std::uint32_t p = ring_->field.modulus();
    for (Term& t : terms) t.coeff %= p;
    std::sort(terms.begin(), terms.end(), [this](const Term& a, const Term& b) {
        return ring_->cmp(order_, a.mon, b.mon) > 0;
    });
    terms_.reserve(terms.size());
    for (Term& t : terms) {
        if (!terms_.empty() && terms_.back().mon == t.mon) {
            terms_.back().coeff = ring_->field.add(terms_.back().coeff, t.coeff);
        } else {
            terms_.push_back(std::move(t));
        }
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_.front();
}

const Monomial& Polynomial::leading_monomial() const {
    return leading_term().mon;
}

Polynomial Polynomial::resorted(Order order) const {
    if (order == order_) return *this;
    return Polynomial(ring_, order, terms_);
}

namespace {

// Merge of two descending term lists with coefficient combination
// result = a + c * b.
std::vector<Term> merge_scaled(const Ring& ring, Order order,
                               const std::vector<Term>& a,
                               const std::vector<Term>& b, std::uint32_t c) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const int cmp = ring.cmp(order, a[i].mon, b[j].mon);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            const std::uint32_t v = ring.field.mul(c, b[j].coeff);
            if (v != 0) out.push_back(Term{b[j].mon, v});
            ++j;
        } else {
            const std::uint32_t v =
                ring.field.add(a[i].coeff, ring.field.mul(c, b[j].coeff));
            if (v != 0) out.push_back(Term{a[i].mon, v});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) {
        const std::uint32_t v = ring.field.mul(c, b[j].coeff);
        if (v != 0) out.push_back(Term{b[j].mon, v});
    }
    return out;
}

}  // namespace

Polynomial Polynomial::add(const Polynomial& other) const {
    if (ring_->field.modulus() != other.ring_->field.modulus())
        throw std::invalid_argument("polynomials over different fields");
    Polynomial r(ring_, order_);
    std::vector<Term> merged = merge_scaled(*ring_, order_, terms_, other.terms_, 1);
    r.terms_ = std::move(merged);
    return r;
}

Polynomial Polynomial::sub(const Polynomial& other) const {
    if (ring_->field.modulus() != other.ring_->field.modulus())
        throw std::invalid_argument("polynomials over different fields");
    Polynomial r(ring_, order_);
    std::vector<Term> merged = merge_scaled(*ring_, order_, terms_, other.terms_,
                                            ring_->field.neg(1));
    r.terms_ = std::move(merged);
    return r;
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
    Polynomial r(ring_, order_);
    c %= ring_->field.modulus();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        const std::uint32_t v = ring_->field.mul(t.coeff, c);
        if (v != 0) r.terms_.push_back(Term{t.mon, v});
    }
    return r;
}

Polynomial Polynomial::term_multiplied(std::uint32_t c, const Monomial& t) const {
    Polynomial r(ring_, order_);
    c %= ring_->field.modulus();
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& s : terms_) {
        const std::uint32_t v = ring_->field.mul(s.coeff, c);
        if (v != 0)
            r.terms_.push_back(Term{mul_monomial(s.mon, t, ring_->weights), v});
    }
    // Multiplication by a fixed monomial preserves the order of terms.
    return r;
}

Polynomial Polynomial::sub_scaled_shift(const Polynomial& other, std::uint32_t c,
                                        const Monomial& t) const {
    Polynomial shifted = other.term_multiplied(ring_->field.neg(c), t);
    Polynomial r(ring_, order_);
    r.terms_ = merge_scaled(*ring_, order_, terms_, shifted.terms_, 1);
    return r;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(ring_->field.inv(terms_.front().coeff));
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != other.terms_[i].coeff ||
            !(terms_[i].mon == other.terms_[i].mon))
            return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff;
        bool any = false;
        for (std::size_t i = 0; i < t.mon.exps.size(); ++i) {
            if (t.mon.exps[i] == 0) continue;
            os << "*" << ring_->vars[i];
            if (t.mon.exps[i] > 1) os << "^" << t.mon.exps[i];
            any = true;
        }
        (void)any;
    }
    return os.str();
}

Polynomial zero_polynomial(RingPtr ring, Order order) {
    return Polynomial(std::move(ring), order);
}

Polynomial constant_polynomial(RingPtr ring, std::uint32_t c, Order order) {
    const Monomial one = one_monomial(ring->weights);
    return Polynomial(ring, order, {Term{one, c}});
}

HomogeneityReport is_whomogeneous(const Polynomial& f) {
    HomogeneityReport r;
    if (f.is_zero()) {
        r.whomogeneous = true;
        return r;
    }
    r.wdeg = f.terms().front().mon.wdeg;
    for (const Term& t : f.terms()) {
        if (t.mon.wdeg != r.wdeg) return HomogeneityReport{false, 0};
    }
    r.whomogeneous = true;
    return r;
}

Polynomial top_component(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("top component of zero polynomial");
    long long top = 0;
    for (const Term& t : f.terms()) top = std::max(top, t.mon.wdeg);
    std::vector<Term> keep;
    for (const Term& t : f.terms())
        if (t.mon.wdeg == top) keep.push_back(t);
    return Polynomial(f.ring(), f.order(), std::move(keep));
}

long long top_wdeg(const Polynomial& f) {
    if (f.is_zero()) throw std::domain_error("degree of zero polynomial");
    long long top = 0;
    for (const Term& t : f.terms()) top = std::max(top, t.mon.wdeg);
    return top;
}

RingPtr unit_weight_ring(const RingPtr& ring) {
    return std::make_shared<const Ring>(
        ring->field, WeightSystem(std::vector<int>(ring->nvars(), 1)),
        ring->vars);
}

Polynomial hom_w(const Polynomial& f, const RingPtr& image_ring) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms())
        terms.push_back(Term{hom_exponents(t.mon, f.ring()->weights), t.coeff});
    return Polynomial(image_ring, f.order(), std::move(terms));
}

Polynomial dehom_w(const Polynomial& f, const RingPtr& source_ring) {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms())
        terms.push_back(
            Term{dehom_exponents(t.mon, source_ring->weights), t.coeff});
    return Polynomial(source_ring, f.order(), std::move(terms));
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    Polynomial work = f;
    std::vector<Term> result;
    while (!work.is_zero()) {
        const Term& lt = work.leading_term();
        bool reduced = false;
        for (const Polynomial& g : G) {
            if (g.is_zero()) continue;
            if (divides(g.leading_monomial(), lt.mon)) {
                const Monomial q =
                    div_monomial(lt.mon, g.leading_monomial(), f.ring()->weights);
                const std::uint32_t c = f.ring()->field.mul(
                    lt.coeff, f.ring()->field.inv(g.leading_term().coeff));
                work = work.sub_scaled_shift(g, c, q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            result.push_back(lt);
            Polynomial rest(f.ring(), f.order());
            std::vector<Term> tail(work.terms().begin() + 1, work.terms().end());
            rest = Polynomial(f.ring(), f.order(), std::move(tail));
            work = std::move(rest);
        }
    }
    return Polynomial(f.ring(), f.order(), std::move(result));
}

PolySystem make_system(RingPtr ring, std::vector<Polynomial> polys) {
    PolySystem sys;
    sys.ring = std::move(ring);
    sys.whomogeneous = true;
    for (Polynomial& f : polys) {
        if (f.is_zero()) throw std::invalid_argument("zero polynomial in system");
        const HomogeneityReport rep = is_whomogeneous(f);
        if (rep.whomogeneous) {
            sys.wdegrees.push_back(rep.wdeg);
        } else {
            sys.whomogeneous = false;
            sys.wdegrees.push_back(top_wdeg(f));
        }
        sys.polys.push_back(std::move(f));
    }
    return sys;
}

}  // namespace wgb
