#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/field.hpp"

namespace mpc {

/// Dense polynomial over a Field, coefficients low-to-high with no trailing
/// zeros (the zero polynomial has an empty coefficient vector, degree -1).
class Poly {
public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<uint32_t> coeffs);

    const Field& field() const { return *f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    static Poly constant(const Field& f, uint32_t v);
    static Poly x_pow(const Field& f, size_t e);
    /// x^m - 1
    static Poly x_pow_minus_one(const Field& f, size_t m);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return f_->same(*o.f_) && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;
    uint32_t eval(uint32_t x) const;
    Poly monic() const;
    Poly scale(uint32_t c) const;

    /// Terms like "x^5 + a^10*x^3 + a^2*x^2 + a^2"; whitespace-insensitive,
    /// '-' accepted as a term separator (same as '+' in characteristic 2).
    static Poly parse(const Field& f, std::string_view text);
    std::string str() const;

private:
    void trim();
    const Field* f_;
    std::vector<uint32_t> c_;
};

struct PolyXgcd {
    Poly g, s, t;  // g = s*a + t*b, g monic unless both inputs are zero
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

/// Residue class ring F_q[x]/(x^m - 1); elements stored as exactly m
/// coefficients. Multiplication is cyclic convolution.
class RingElem {
public:
    RingElem(const Field& f, size_t m) : f_(&f), c_(m, 0) { check(m >= 1, "ring needs m >= 1"); }
    RingElem(const Field& f, size_t m, std::span<const uint32_t> coeffs);
    static RingElem from_poly(const Poly& p, size_t m);
    static RingElem constant(const Field& f, size_t m, uint32_t v);

    const Field& field() const { return *f_; }
    size_t modulus_degree() const { return c_.size(); }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    Poly to_poly() const { return Poly(*f_, c_); }
    bool is_zero() const;
    /// Count of nonzero coefficients of the degree-< m residue.
    uint64_t weight() const { return hamming_weight(c_); }

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    bool operator==(const RingElem& o) const {
        return f_->same(*o.f_) && c_ == o.c_;
    }
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    /// Unit test: gcd(residue, x^m - 1) is a nonzero constant.
    bool is_unit() const;
    /// Multiplicative inverse mod x^m - 1; throws invariant_error on non-units.
    RingElem inv() const;

    static RingElem parse(const Field& f, size_t m, std::string_view text);
    std::string str() const { return to_poly().str(); }

private:
    const Field* f_;
    std::vector<uint32_t> c_;
};

} // namespace mpc
