#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mpc/util.hpp"

namespace mpc {

/// GF(p^m) with table-based arithmetic. Elements are raw uint32_t values whose
/// base-p digits are the coefficients of the residue polynomial (low digit =
/// constant term); for p = 2 this is the usual bitmask encoding. The residue
/// of x is the primitive element alpha, so every nonzero element is alpha^k.
class Field {
public:
    // Largest supported field size; tables are O(q).
    static constexpr uint64_t kMaxSize = 1ull << 20;

    /// Construct with the default modulus for (p, m): the first primitive
    /// monic degree-m polynomial over GF(p) in low-coefficient counting order.
    /// GF(16) gets x^4+x+1 and GF(8) gets x^3+x+1 under this rule.
    Field(uint32_t p, uint32_t m);

    /// Construct with an explicit monic modulus, coefficients low-to-high
    /// (length m+1, values reduced mod p). The modulus must be irreducible and
    /// x must be primitive; the two failure modes are reported separately.
    Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus);

    uint64_t size() const { return q_; }
    uint32_t characteristic() const { return p_; }
    uint32_t degree() const { return m_; }
    const std::vector<uint32_t>& modulus() const { return mod_; }

    bool same(const Field& o) const {
        return p_ == o.p_ && m_ == o.m_ && mod_ == o.mod_;
    }

    uint32_t add(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        return add_general(a, b);
    }
    uint32_t neg(uint32_t a) const {
        if (p_ == 2) return a;
        return neg_general(a);
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        if (p_ == 2) return a ^ b;
        return add_general(a, neg_general(b));
    }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return alog_[log_[a] + log_[b]];
    }
    uint32_t inv(uint32_t a) const {
        check(a != 0, "inverse of zero");
        return alog_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    uint32_t div(uint32_t a, uint32_t b) const {
        check(b != 0, "division by zero");
        if (a == 0) return 0;
        return alog_[log_[a] + (q_ - 1 - log_[b]) % (q_ - 1)];
    }
    uint32_t pow(uint32_t a, int64_t e) const;
    /// n * 1 for an integer n, i.e. the image of n mod p in the prime subfield.
    uint32_t from_int(uint64_t n) const { return static_cast<uint32_t>(n % p_); }

    uint32_t alpha() const { return alog_[1 % (q_ - 1)]; }
    /// alpha^e with e reduced mod q-1 (negative e allowed).
    uint32_t alpha_pow(int64_t e) const {
        int64_t r = e % static_cast<int64_t>(q_ - 1);
        if (r < 0) r += static_cast<int64_t>(q_ - 1);
        return alog_[static_cast<uint64_t>(r)];
    }
    /// Discrete log base alpha of a nonzero element.
    uint32_t log(uint32_t a) const {
        check(a != 0, "log of zero");
        return log_[a];
    }

    /// Canonical token: "0", "1", "a", or "a^k" with 2 <= k <= q-2.
    std::string format(uint32_t a) const;
    /// Parses the token grammar; "a^k" accepts any k >= 0 and reduces mod q-1.
    uint32_t parse(std::string_view token) const;

    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);

private:
    uint32_t p_, m_;
    uint64_t q_;
    std::vector<uint32_t> mod_;
    std::vector<uint32_t> log_;   // index: element value, log_[0] unused
    std::vector<uint32_t> alog_;  // doubled: alog_[e] for e in [0, 2(q-1))

    void build_tables();
    uint32_t add_general(uint32_t a, uint32_t b) const;
    uint32_t neg_general(uint32_t a) const;
};

/// Element bound to its field; arithmetic checks both operands share the field.
class FieldElement {
public:
    FieldElement(const Field& f, uint32_t raw) : f_(&f), v_(raw) {
        check(raw < f.size(), "element value out of range");
    }
    uint32_t raw() const { return v_; }
    const Field& field() const { return *f_; }
    std::string str() const { return f_->format(v_); }

    FieldElement operator+(const FieldElement& o) const { return with(o, f_->add(v_, o.v_)); }
    FieldElement operator-(const FieldElement& o) const { return with(o, f_->sub(v_, o.v_)); }
    FieldElement operator*(const FieldElement& o) const { return with(o, f_->mul(v_, o.v_)); }
    FieldElement operator/(const FieldElement& o) const { return with(o, f_->div(v_, o.v_)); }
    FieldElement operator-() const { return FieldElement(*f_, f_->neg(v_)); }
    FieldElement inv() const { return FieldElement(*f_, f_->inv(v_)); }
    FieldElement pow(int64_t e) const { return FieldElement(*f_, f_->pow(v_, e)); }
    bool operator==(const FieldElement& o) const {
        return f_->same(*o.f_) && v_ == o.v_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement with(const FieldElement& o, uint32_t r) const {
        check(f_->same(*o.f_), "operands belong to different fields");
        return FieldElement(*f_, r);
    }
    const Field* f_;
    uint32_t v_;
};

} // namespace mpc
