#include "mpc/poly.hpp"

#include <algorithm>
#include <charconv>

namespace mpc {

Poly::Poly(const Field& f, std::vector<uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
    for (uint32_t v : c_) check(v < f.size(), "coefficient out of range");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Field& f, uint32_t v) { return Poly(f, {v}); }

Poly Poly::x_pow(const Field& f, size_t e) {
    std::vector<uint32_t> c(e + 1, 0);
    c[e] = 1;
    return Poly(f, std::move(c));
}

Poly Poly::x_pow_minus_one(const Field& f, size_t m) {
    check(m >= 1, "x^m - 1 needs m >= 1");
    std::vector<uint32_t> c(m + 1, 0);
    c[m] = 1;
    c[0] = f.neg(1);
    return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    check(f_->same(*o.f_), "polynomials over different fields");
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    check(f_->same(*o.f_), "polynomials over different fields");
    std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = f_->sub(coeff(i), o.coeff(i));
    return Poly(*f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    check(f_->same(*o.f_), "polynomials over different fields");
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            c[i + j] = f_->add(c[i + j], f_->mul(c_[i], o.c_[j]));
        }
    }
    return Poly(*f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    check(f_->same(*divisor.f_), "polynomials over different fields");
    check(!divisor.is_zero(), "division by zero polynomial");
    std::vector<uint32_t> rem = c_;
    std::vector<uint32_t> quot;
    int dd = divisor.degree();
    if (degree() >= dd) quot.assign(degree() - dd + 1, 0);
    uint32_t inv_lead = f_->inv(divisor.c_.back());
    for (int d = degree(); d >= dd; --d) {
        uint32_t lead = rem[d];
        if (lead == 0) continue;
        uint32_t c = f_->mul(lead, inv_lead);
        quot[d - dd] = c;
        for (int i = 0; i <= dd; ++i)
            rem[d - dd + i] = f_->sub(rem[d - dd + i], f_->mul(c, divisor.c_[i]));
    }
    return {Poly(*f_, std::move(quot)), Poly(*f_, std::move(rem))};
}

uint32_t Poly::eval(uint32_t x) const {
    uint32_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::monic() const {
    check(!is_zero(), "monic of zero polynomial");
    return scale(f_->inv(c_.back()));
}

Poly Poly::scale(uint32_t c) const {
    std::vector<uint32_t> out(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) out[i] = f_->mul(c_[i], c);
    return Poly(*f_, std::move(out));
}

namespace {

// One term of the grammar: [coefficient][*][x[^exp]].
void parse_term(const Field& f, std::string_view term, bool negate, std::vector<uint32_t>& acc) {
    std::string t;
    for (char ch : term)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw parse_error("empty polynomial term");

    uint32_t coeff = 1;
    size_t exp = 0;
    size_t xpos = t.find('x');
    if (xpos == std::string::npos) {
        coeff = f.parse(t);
    } else {
        std::string cpart = t.substr(0, xpos);
        if (!cpart.empty() && cpart.back() == '*') cpart.pop_back();
        if (!cpart.empty()) coeff = f.parse(cpart);
        std::string xpart = t.substr(xpos);
        if (xpart == "x") {
            exp = 1;
        } else if (xpart.size() > 2 && xpart[0] == 'x' && xpart[1] == '^') {
            uint64_t e = 0;
            auto [ptr, ec] = std::from_chars(xpart.data() + 2, xpart.data() + xpart.size(), e);
            if (ec != std::errc() || ptr != xpart.data() + xpart.size())
                throw parse_error("bad exponent in term '" + t + "'");
            exp = static_cast<size_t>(e);
        } else {
            throw parse_error("bad term '" + t + "'");
        }
    }
    if (negate) coeff = f.neg(coeff);
    if (acc.size() <= exp) acc.resize(exp + 1, 0);
    acc[exp] = f.add(acc[exp], coeff);
}

} // namespace

Poly Poly::parse(const Field& f, std::string_view text) {
    std::string s = mpc::trim(text);
    if (s.empty()) throw parse_error("empty polynomial");
    std::vector<uint32_t> acc;
    size_t start = 0;
    bool neg = false;
    if (s[0] == '-') {
        neg = true;
        start = 1;
    }
    size_t i = start;
    for (; i <= s.size(); ++i) {
        // '+'/'-' inside "a^..." exponents can't occur; separators are top level
        if (i == s.size() || s[i] == '+' || s[i] == '-') {
            parse_term(f, std::string_view(s).substr(start, i - start), neg, acc);
            if (i < s.size()) neg = (s[i] == '-');
            start = i + 1;
        }
    }
    return Poly(f, std::move(acc));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = f_->format(c_[i]);
        if (i == 0) {
            out += cs;
        } else {
            std::string xs = (i == 1) ? "x" : "x^" + std::to_string(i);
            out += (cs == "1") ? xs : cs + "*" + xs;
        }
    }
    return out;
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
    check(a.field().same(b.field()), "polynomials over different fields");
    const Field& f = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        Poly s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Poly t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    uint32_t lead_inv = f.inv(r0.coeffs().back());
    return {r0.scale(lead_inv), s0.scale(lead_inv), t0.scale(lead_inv)};
}

RingElem::RingElem(const Field& f, size_t m, std::span<const uint32_t> coeffs) : f_(&f), c_(m, 0) {
    check(m >= 1, "ring needs m >= 1");
    check(coeffs.size() <= m, "coefficient vector longer than m");
    for (size_t i = 0; i < coeffs.size(); ++i) {
        check(coeffs[i] < f.size(), "coefficient out of range");
        c_[i] = coeffs[i];
    }
}

RingElem RingElem::from_poly(const Poly& p, size_t m) {
    const Field& f = p.field();
    RingElem r(f, m);
    // reduce mod x^m - 1: x^(m+i) folds onto x^i
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        r.c_[i % m] = f.add(r.c_[i % m], p.coeffs()[i]);
    return r;
}

RingElem RingElem::constant(const Field& f, size_t m, uint32_t v) {
    RingElem r(f, m);
    r.c_[0] = v;
    return r;
}

bool RingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

RingElem RingElem::operator+(const RingElem& o) const {
    check(f_->same(*o.f_) && c_.size() == o.c_.size(), "ring mismatch");
    RingElem r(*f_, c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->add(c_[i], o.c_[i]);
    return r;
}

RingElem RingElem::operator-(const RingElem& o) const {
    check(f_->same(*o.f_) && c_.size() == o.c_.size(), "ring mismatch");
    RingElem r(*f_, c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = f_->sub(c_[i], o.c_[i]);
    return r;
}

RingElem RingElem::operator*(const RingElem& o) const {
    check(f_->same(*o.f_) && c_.size() == o.c_.size(), "ring mismatch");
    size_t m = c_.size();
    RingElem r(*f_, m);
    for (size_t i = 0; i < m; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < m; ++j) {
            if (o.c_[j] == 0) continue;
            size_t k = i + j >= m ? i + j - m : i + j;
            r.c_[k] = f_->add(r.c_[k], f_->mul(c_[i], o.c_[j]));
        }
    }
    return r;
}

bool RingElem::is_unit() const {
    if (is_zero()) return false;
    auto g = poly_xgcd(to_poly(), Poly::x_pow_minus_one(*f_, c_.size())).g;
    return g.degree() == 0;
}

RingElem RingElem::inv() const {
    check(!is_zero(), "inverse of zero ring element");
    auto res = poly_xgcd(to_poly(), Poly::x_pow_minus_one(*f_, c_.size()));
    check(res.g.degree() == 0, "ring element is not a unit");
    // g is monic constant 1, so s * residue = 1 mod x^m - 1
    return from_poly(res.s, c_.size());
}

RingElem RingElem::parse(const Field& f, size_t m, std::string_view text) {
    Poly p = Poly::parse(f, text);
    if (p.degree() >= static_cast<int>(m))
        throw parse_error("ring element degree must be below " + std::to_string(m));
    return from_poly(p, m);
}

} // namespace mpc
