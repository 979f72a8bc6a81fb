#include "mpc/field.hpp"

#include <algorithm>
#include <charconv>

namespace mpc {
namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Plain mod-p polynomial helpers used before any Field exists. Coefficients
// low-to-high, trailing zeros trimmed.
using PPoly = std::vector<uint32_t>;

PPoly ptrim(PPoly c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

PPoly pmod(uint32_t p, PPoly a, const PPoly& b) {
    a = ptrim(std::move(a));
    while (a.size() >= b.size()) {
        // b is monic
        uint32_t lead = a.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            uint64_t t = a[shift + i] + static_cast<uint64_t>(p - 1) * lead % p * b[i];
            a[shift + i] = static_cast<uint32_t>(t % p);
        }
        a = ptrim(std::move(a));
    }
    return a;
}

bool divides(uint32_t p, const PPoly& d, const PPoly& f) {
    return pmod(p, f, d).empty();
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible(uint32_t p, const PPoly& f) {
    uint32_t m = static_cast<uint32_t>(f.size()) - 1;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t c = 0; c < count; ++c) {
            PPoly cand(d + 1, 0);
            uint64_t v = c;
            for (uint32_t i = 0; i < d; ++i) {
                cand[i] = static_cast<uint32_t>(v % p);
                v /= p;
            }
            cand[d] = 1;
            if (divides(p, cand, f)) return false;
        }
    }
    return true;
}

} // namespace

Field::Field(uint32_t p, uint32_t m) : Field(p, m, default_modulus(p, m)) {}

Field::Field(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus) : p_(p), m_(m) {
    check(is_prime(p), "characteristic must be prime");
    check(m >= 1, "extension degree must be at least 1");
    q_ = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q_ *= p;
        check(q_ <= kMaxSize, "field size exceeds supported limit");
    }
    check(modulus.size() == m + 1, "modulus must have degree m");
    mod_ = modulus;
    for (auto& c : mod_) c %= p;
    check(mod_.back() % p == 1, "modulus must be monic");
    check(irreducible(p_, mod_), "modulus is reducible");
    build_tables();
}

void Field::build_tables() {
    log_.assign(q_, 0);
    alog_.assign(2 * (q_ - 1), 0);

    // digits of the current power of x, low-to-high
    std::vector<uint32_t> cur(m_, 0);
    cur[0] = 1;
    auto pack = [&](const std::vector<uint32_t>& d) {
        uint32_t v = 0;
        for (uint32_t i = m_; i-- > 0;) v = v * p_ + d[i];
        return v;
    };

    uint64_t order = q_ - 1;
    for (uint64_t e = 0; e < order; ++e) {
        uint32_t v = pack(cur);
        if (e > 0 && v == 1) {
            // x's powers cycled early: x generates a proper subgroup
            throw invariant_error("modulus is irreducible but x is not primitive; pick another modulus");
        }
        alog_[e] = v;
        alog_[e + order] = v;
        log_[v] = static_cast<uint32_t>(e);
        // multiply by x: shift digits, reduce by modulus
        uint32_t overflow = cur[m_ - 1];
        for (uint32_t i = m_; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (overflow) {
            for (uint32_t i = 0; i < m_; ++i) {
                uint64_t t = cur[i] + static_cast<uint64_t>(p_ - 1) * overflow % p_ * mod_[i];
                cur[i] = static_cast<uint32_t>(t % p_);
            }
        }
    }
    if (pack(cur) != 1)
        throw invariant_error("modulus is irreducible but x is not primitive; pick another modulus");
}

uint32_t Field::add_general(uint32_t a, uint32_t b) const {
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += ((da + db) % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::neg_general(uint32_t a) const {
    uint32_t out = 0, mult = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        out += ((p_ - da) % p_) * mult;
        mult *= p_;
    }
    return out;
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        check(e > 0, "0 to a non-positive power");
        return 0;
    }
    int64_t ord = static_cast<int64_t>(q_ - 1);
    int64_t r = (static_cast<int64_t>(log_[a]) % ord) * (e % ord) % ord;
    if (r < 0) r += ord;
    return alog_[static_cast<uint64_t>(r)];
}

std::string Field::format(uint32_t a) const {
    check(a < q_, "element value out of range");
    if (a == 0) return "0";
    uint32_t e = log_[a];
    if (e == 0) return "1";
    if (e == 1) return "a";
    return "a^" + std::to_string(e);
}

uint32_t Field::parse(std::string_view token) const {
    std::string t = trim(token);
    if (t == "0") return 0;
    if (t == "1") return 1;
    if (t == "a") return alpha();
    if (t.size() > 2 && t[0] == 'a' && t[1] == '^') {
        uint64_t e = 0;
        auto [ptr, ec] = std::from_chars(t.data() + 2, t.data() + t.size(), e);
        if (ec == std::errc() && ptr == t.data() + t.size())
            return alpha_pow(static_cast<int64_t>(e % (q_ - 1)));
    }
    throw parse_error("bad element token: '" + t + "'");
}

std::vector<uint32_t> Field::default_modulus(uint32_t p, uint32_t m) {
    check(is_prime(p), "characteristic must be prime");
    check(m >= 1, "extension degree must be at least 1");
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) {
        count *= p;
        check(count <= kMaxSize, "field size exceeds supported limit");
    }
    for (uint64_t c = 0; c < count; ++c) {
        std::vector<uint32_t> cand(m + 1, 0);
        uint64_t v = c;
        for (uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<uint32_t>(v % p);
            v /= p;
        }
        cand[m] = 1;
        if (!irreducible(p, cand)) continue;
        try {
            Field f(p, m, cand);
            return cand;
        } catch (const invariant_error&) {
            // irreducible but x not primitive; keep searching
        }
    }
    throw invariant_error("no primitive modulus found");
}

} // namespace mpc
