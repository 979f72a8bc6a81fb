#include "mpc/reed_solomon.hpp"

#include <algorithm>
#include <set>

namespace mpc {

GSParams gs_params(uint64_t m, uint64_t k, uint64_t v) {
    check(k >= 2, "list decoding parameters need k >= 2");
    check(k < m, "list decoding parameters need k < m");
    check(v >= 1, "multiplicity must be at least 1");
    uint64_t num = m * (v * (v + 1) / 2);  // m * C(v+1,2)
    uint64_t den = k - 1;
    // unique r with C(r,2)*den <= num < C(r+1,2)*den
    uint64_t r = 1;
    while ((r + 1) * r / 2 * den <= num) ++r;
    require(r * (r - 1) / 2 * den <= num, "weighted-degree bracket failed");
    uint64_t l = (2 * num + r * (r - 1) * den) / (2 * r);
    uint64_t floor_lv = l / v;
    require(floor_lv + 1 <= m, "agreement threshold exceeds code length");
    GSParams p;
    p.m = m;
    p.k = k;
    p.v = v;
    p.r = r;
    p.l = l;
    p.tau = m - floor_lv - 1;
    p.list_cap = l / den;
    return p;
}

RSCode::RSCode(const Field& f, size_t k, size_t window_start) : f_(&f), k_(k) {
    m_ = static_cast<size_t>(f.size() - 1);
    check(m_ >= 2, "field too small for a Reed-Solomon code");
    check(k >= 1 && k <= m_, "dimension out of range");
    w_ = window_start % m_;
}

std::vector<uint32_t> RSCode::encode(std::span<const uint32_t> msg) const {
    check(msg.size() == k_, "message length must equal dimension");
    const Field& f = *f_;
    std::vector<uint32_t> c(m_);
    Poly g(f, std::vector<uint32_t>(msg.begin(), msg.end()));
    int64_t shift = static_cast<int64_t>(w_) - 1;
    for (size_t i = 0; i < m_; ++i) {
        uint32_t e = g.eval(f.alpha_pow(static_cast<int64_t>(i)));
        c[i] = f.mul(e, f.alpha_pow(-shift * static_cast<int64_t>(i)));
    }
    return c;
}

bool RSCode::contains(std::span<const uint32_t> word) const {
    check(word.size() == m_, "word length must equal code length");
    const Field& f = *f_;
    Poly c(f, std::vector<uint32_t>(word.begin(), word.end()));
    for (size_t t = 0; t < m_ - k_; ++t)
        if (c.eval(f.alpha_pow(static_cast<int64_t>(w_ + t))) != 0) return false;
    return true;
}

LinearCode RSCode::to_linear_code() const {
    Mat g(k_, m_);
    const Field& f = *f_;
    int64_t shift = static_cast<int64_t>(w_) - 1;
    for (size_t j = 0; j < k_; ++j)
        for (size_t i = 0; i < m_; ++i)
            g.at(j, i) = f.alpha_pow(static_cast<int64_t>(i) * (static_cast<int64_t>(j) - shift));
    LinearCode code = LinearCode::from_generator(f, std::move(g));
    code.set_known_distance(m_ - k_ + 1);
    return code;
}

Poly RSCode::generator_poly() const {
    const Field& f = *f_;
    Poly g = Poly::constant(f, 1);
    for (size_t t = 0; t < m_ - k_; ++t) {
        uint32_t root = f.alpha_pow(static_cast<int64_t>(w_ + t));
        g = g * Poly(f, {f.neg(root), 1});
    }
    return g;
}

namespace {

// binomial coefficient mod p by Lucas' theorem
uint32_t lucas_binom(uint64_t n, uint64_t k, uint32_t p, const std::vector<uint32_t>& pascal) {
    if (k > n) return 0;
    uint32_t out = 1;
    while (n || k) {
        uint64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        out = static_cast<uint32_t>(static_cast<uint64_t>(out) * pascal[nd * p + kd] % p);
        n /= p;
        k /= p;
    }
    return out;
}

std::vector<uint32_t> small_pascal(uint32_t p) {
    std::vector<uint32_t> t(p * p, 0);
    for (uint32_t n = 0; n < p; ++n) {
        t[n * p] = 1;
        for (uint32_t k = 1; k <= n; ++k)
            t[n * p + k] = (t[(n - 1) * p + k - 1] + (k <= n - 1 ? t[(n - 1) * p + k] : 0)) % p;
    }
    return t;
}

uint32_t pow0(const Field& f, uint32_t a, uint64_t e) {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return f.pow(a, static_cast<int64_t>(e));
}

// bivariate polynomial, y-major: b[s] = x-coefficient list of y^s
using Bivar = std::vector<std::vector<uint32_t>>;

bool row_zero(const std::vector<uint32_t>& r) {
    return std::all_of(r.begin(), r.end(), [](uint32_t v) { return v == 0; });
}

void trim_y(Bivar& b) {
    while (!b.empty() && row_zero(b.back())) b.pop_back();
}

// divide out the largest power of x dividing every coefficient
void remove_x_factor(Bivar& b) {
    size_t e = SIZE_MAX;
    for (auto& row : b) {
        size_t first = 0;
        while (first < row.size() && row[first] == 0) ++first;
        if (first < row.size()) e = std::min(e, first);
    }
    if (e == SIZE_MAX || e == 0) return;
    for (auto& row : b) {
        if (row.size() > e)
            row.erase(row.begin(), row.begin() + static_cast<ptrdiff_t>(e));
        else
            row.clear();
    }
}

// B(x, x*y + gamma)
Bivar shift_y(const Field& f, const Bivar& b, uint32_t gamma, const std::vector<uint32_t>& pascal) {
    uint32_t p = f.characteristic();
    size_t max_x = 0;
    for (const auto& row : b) max_x = std::max(max_x, row.size());
    Bivar out(b.size());
    for (size_t t = 0; t < b.size(); ++t) out[t].assign(max_x + t, 0);
    for (size_t s = 0; s < b.size(); ++s) {
        if (row_zero(b[s])) continue;
        for (size_t t = 0; t <= s; ++t) {
            uint32_t bin = lucas_binom(s, t, p, pascal);
            if (bin == 0) continue;
            uint32_t scale = f.mul(f.from_int(bin), pow0(f, gamma, s - t));
            if (scale == 0) continue;
            for (size_t i = 0; i < b[s].size(); ++i) {
                if (b[s][i] == 0) continue;
                out[t][i + t] = f.add(out[t][i + t], f.mul(scale, b[s][i]));
            }
        }
    }
    trim_y(out);
    return out;
}

// all f coefficient vectors (length k) with Q(x, f(x)) = 0
void rr_roots(const Field& f, Bivar b, size_t k, std::vector<uint32_t>& prefix,
              std::vector<std::vector<uint32_t>>& out, const std::vector<uint32_t>& pascal) {
    remove_x_factor(b);
    require(!b.empty(), "interpolation polynomial vanished during root search");
    if (prefix.size() == k) {
        if (b.empty() || row_zero(b[0])) out.push_back(prefix);
        return;
    }
    // roots of Q(0, y)
    std::vector<uint32_t> ruv(b.size());
    for (size_t s = 0; s < b.size(); ++s) ruv[s] = b[s].empty() ? 0 : b[s][0];
    for (uint64_t g = 0; g < f.size(); ++g) {
        uint32_t acc = 0;
        for (size_t s = ruv.size(); s-- > 0;)
            acc = f.add(f.mul(acc, static_cast<uint32_t>(g)), ruv[s]);
        if (acc != 0) continue;
        prefix.push_back(static_cast<uint32_t>(g));
        rr_roots(f, shift_y(f, b, static_cast<uint32_t>(g), pascal), k, prefix, out, pascal);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<uint32_t>> gs_list_decode(const RSCode& code,
                                                  std::span<const uint32_t> received, uint64_t v) {
    const Field& f = code.field();
    size_t m = code.length(), k = code.dim();
    check(received.size() == m, "received word length must equal code length");
    GSParams gp = gs_params(m, k, v);

    // evaluation view of the received word
    int64_t shift = static_cast<int64_t>(code.window_start()) - 1;
    std::vector<uint32_t> y(m);
    for (size_t i = 0; i < m; ++i)
        y[i] = f.mul(received[i], f.alpha_pow(shift * static_cast<int64_t>(i)));

    // monomials x^r y^s with r + (k-1)s <= l
    std::vector<std::pair<uint32_t, uint32_t>> mono;
    for (uint32_t s = 0; s * (k - 1) <= gp.l; ++s)
        for (uint32_t r = 0; r + s * (k - 1) <= gp.l; ++r) mono.emplace_back(r, s);

    size_t n_constraints = m * (v * (v + 1) / 2);
    require(mono.size() > n_constraints,
            "interpolation system must have more unknowns than constraints");

    std::vector<uint32_t> pascal = small_pascal(f.characteristic());
    Mat sys(n_constraints, mono.size());
    size_t row = 0;
    for (size_t i = 0; i < m; ++i) {
        uint32_t xi = f.alpha_pow(static_cast<int64_t>(i));
        for (uint64_t a = 0; a < v; ++a) {
            for (uint64_t b = 0; a + b < v; ++b, ++row) {
                for (size_t c = 0; c < mono.size(); ++c) {
                    auto [r, s] = mono[c];
                    if (r < a || s < b) continue;
                    uint32_t bin = static_cast<uint32_t>(
                        static_cast<uint64_t>(lucas_binom(r, a, f.characteristic(), pascal)) *
                        lucas_binom(s, b, f.characteristic(), pascal) % f.characteristic());
                    if (bin == 0) continue;
                    uint32_t term = f.mul(f.from_int(bin), pow0(f, xi, r - a));
                    term = f.mul(term, pow0(f, y[i], s - b));
                    sys.at(row, c) = term;
                }
            }
        }
    }
    require(row == n_constraints, "constraint count mismatch");

    auto nv = null_vector(f, std::move(sys));
    require(nv.has_value(), "interpolation system has no nonzero solution");

    Bivar q;
    for (size_t c = 0; c < mono.size(); ++c) {
        if ((*nv)[c] == 0) continue;
        auto [r, s] = mono[c];
        if (q.size() <= s) q.resize(s + 1);
        if (q[s].size() <= r) q[s].resize(r + 1, 0);
        q[s][r] = (*nv)[c];
    }
    trim_y(q);
    require(!q.empty(), "interpolation produced the zero polynomial");

    std::vector<std::vector<uint32_t>> cands;
    std::vector<uint32_t> prefix;
    rr_roots(f, q, k, prefix, cands, pascal);
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    require(cands.size() <= gp.list_cap, "root count exceeds the y-degree cap");

    std::vector<std::vector<uint32_t>> out;
    for (const auto& cand : cands) {
        auto word = code.encode(cand);
        if (hamming_distance(word, received) <= gp.tau) out.push_back(std::move(word));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<size_t> consecutive_root_window(const Field& f, const Poly& gen) {
    check(!gen.is_zero(), "zero polynomial has no root window");
    size_t m = static_cast<size_t>(f.size() - 1);
    std::vector<bool> is_root(m, false);
    size_t count = 0;
    for (size_t j = 0; j < m; ++j) {
        if (gen.eval(f.alpha_pow(static_cast<int64_t>(j))) == 0) {
            is_root[j] = true;
            ++count;
        }
    }
    if (count != static_cast<size_t>(gen.degree())) return std::nullopt;
    if (count == 0) return std::nullopt;
    if (count == m) return 0;
    // a single consecutive run has exactly one start: a root whose predecessor
    // (mod m) is not a root
    size_t start = m;
    size_t starts = 0;
    for (size_t j = 0; j < m; ++j) {
        if (is_root[j] && !is_root[(j + m - 1) % m]) {
            start = j;
            ++starts;
        }
    }
    if (starts != 1) return std::nullopt;
    return start;
}

std::optional<RSCode> detect_rs_structure(const Field& f, const LinearCode& code) {
    size_t m = static_cast<size_t>(f.size() - 1);
    if (code.length() != m || m < 2) return std::nullopt;
    size_t k = code.dim();
    if (k < 1 || k > m) return std::nullopt;
    if (code.cyclic_generator()) {
        const Poly& gen = *code.cyclic_generator();
        if (static_cast<size_t>(gen.degree()) != m - k) return std::nullopt;
        auto w = consecutive_root_window(f, gen);
        if (!w) return std::nullopt;
        return RSCode(f, k, *w);
    }
    std::vector<uint32_t> row(m);
    for (size_t w = 0; w < m; ++w) {
        RSCode cand(f, k, w);
        bool all = true;
        for (size_t r = 0; r < k && all; ++r) {
            for (size_t c = 0; c < m; ++c) row[c] = code.generator().at(r, c);
            all = cand.contains(row);
        }
        if (all) return cand;
    }
    return std::nullopt;
}

} // namespace mpc
