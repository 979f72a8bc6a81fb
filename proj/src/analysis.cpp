#include "mpc/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>

namespace mpc {

BigInt binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

std::string rational_str(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational good_set_probability(uint64_t m, uint64_t l, uint64_t s, uint64_t tau,
                              std::span<const uint64_t> taus) {
    check(s >= 1 && s <= l, "need 1 <= s <= l");
    check(taus.size() == s - 1, "need one radius per chosen block except the last");
    check(tau <= m * l, "weight exceeds the word length");
    BigInt num = 0;
    std::function<void(size_t, uint64_t, BigInt)> rec = [&](size_t j, uint64_t used, BigInt prod) {
        if (j == s - 1) {
            num += prod * binomial(m * (l - s + 1), tau - used);
            return;
        }
        uint64_t cap = std::min(taus[j], tau - used);
        for (uint64_t aj = 0; aj <= cap; ++aj)
            rec(j + 1, used + aj, prod * binomial(m, aj));
    };
    rec(0, 0, BigInt(1));
    return Rational(num, binomial(m * l, tau));
}

Rational good_set_probability_exact(uint64_t m, uint64_t l, uint64_t s, uint64_t tau,
                                    std::span<const uint64_t> taus) {
    check(s >= 1 && s <= l, "need 1 <= s <= l");
    check(taus.size() == s, "need one radius per chosen block");
    check(tau <= m * l, "weight exceeds the word length");
    BigInt num = 0;
    std::function<void(size_t, uint64_t, BigInt)> rec = [&](size_t i, uint64_t left, BigInt prod) {
        if (left > (l - i) * m) return;
        if (i == l) {
            num += prod;
            return;
        }
        uint64_t cap = std::min(left, i < s ? std::min(taus[i], m) : m);
        for (uint64_t w = 0; w <= cap; ++w) rec(i + 1, left - w, prod * binomial(m, w));
    };
    rec(0, tau, BigInt(1));
    return Rational(num, binomial(m * l, tau));
}

uint64_t uniform_below(std::mt19937_64& rng, uint64_t n) {
    require(n >= 1, "empty draw range");
    if (n == 1) return 0;
    uint64_t mask = UINT64_MAX >> std::countl_zero(n - 1);
    uint64_t v;
    do {
        v = rng() & mask;
    } while (v >= n);
    return v;
}

namespace {

// uniform below a big bound, by rejection on fixed-width bit blocks
BigInt uniform_below_big(std::mt19937_64& rng, const BigInt& n) {
    require(n >= 1, "empty draw range");
    if (n == 1) return 0;
    size_t bits = boost::multiprecision::msb(n - 1) + 1;
    size_t words = (bits + 63) / 64;
    BigInt v;
    do {
        v = 0;
        for (size_t i = 0; i < words; ++i) v = (v << 64) | rng();
        v >>= words * 64 - bits;
    } while (v >= n);
    return v;
}

uint64_t draw_weight(std::mt19937_64& rng, uint64_t tau, ErrorWeightModel model,
                     const std::vector<BigInt>& cumulative) {
    if (model == ErrorWeightModel::uniform) return uniform_below(rng, tau + 1);
    BigInt r = uniform_below_big(rng, cumulative.back());
    for (uint64_t w = 0; w <= tau; ++w)
        if (r < cumulative[w]) return w;
    require(false, "cumulative weight table exhausted");
    return 0;
}

} // namespace

std::vector<uint32_t> random_error(std::mt19937_64& rng, const Field& f, size_t n,
                                   uint64_t weight) {
    check(weight <= n, "error weight exceeds the length");
    std::vector<uint32_t> e(n, 0);
    std::vector<size_t> idx(n);
    std::iota(idx.begin(), idx.end(), size_t{0});
    for (uint64_t i = 0; i < weight; ++i) {
        size_t pick = i + uniform_below(rng, n - i);
        std::swap(idx[i], idx[pick]);
        e[idx[i]] = 1 + static_cast<uint32_t>(uniform_below(rng, f.size() - 1));
    }
    return e;
}

ProbEstimate estimate_p_tau(const RSCode& code, uint64_t v, uint64_t trials, uint64_t seed,
                            ErrorWeightModel model, unsigned threads) {
    check(trials >= 1, "need at least one trial");
    const Field& f = code.field();
    size_t m = code.length(), k = code.dim();
    uint64_t tau = gs_params(m, k, v).tau;

    std::vector<BigInt> cumulative(tau + 1);
    BigInt acc = 0;
    for (uint64_t w = 0; w <= tau; ++w) {
        acc += binomial(m, w) * boost::multiprecision::pow(BigInt(f.size() - 1),
                                                           static_cast<unsigned>(w));
        cumulative[w] = acc;
    }

    std::atomic<uint64_t> hits{0};
    parallel_chunks(trials, threads, [&](uint64_t lo, uint64_t hi, unsigned) {
        uint64_t local = 0;
        std::vector<uint32_t> msg(k), y(m);
        for (uint64_t t = lo; t < hi; ++t) {
            auto rng = trial_rng(seed, t);
            for (size_t i = 0; i < k; ++i)
                msg[i] = static_cast<uint32_t>(uniform_below(rng, f.size()));
            auto cw = code.encode(msg);
            uint64_t w = draw_weight(rng, tau, model, cumulative);
            auto err = random_error(rng, f, m, w);
            for (size_t i = 0; i < m; ++i) y[i] = f.add(cw[i], err[i]);
            if (gs_list_decode(code, y, v).size() >= 2) ++local;
        }
        hits += local;
    });

    ProbEstimate p;
    p.successes = hits.load();
    p.trials = trials;
    p.seed = seed;
    p.estimate = static_cast<double>(p.successes) / static_cast<double>(trials);
    p.std_error = std::sqrt(p.estimate * (1.0 - p.estimate) / static_cast<double>(trials));
    return p;
}

double decoder_success_probability(std::span<const double> p_estimates) {
    double out = 1.0;
    for (double p : p_estimates) {
        check(p >= 0.0 && p <= 1.0, "probability out of range");
        out *= 1.0 - p;
    }
    return out;
}

double bad_tuple_survival_bound(uint64_t l, double p_tau1) {
    check(p_tau1 >= 0.0 && p_tau1 <= 1.0, "probability out of range");
    return std::min(1.0, static_cast<double>(l) * p_tau1);
}

BigInt complexity_estimate(uint64_t l, uint64_t s, std::span<const uint64_t> list_caps,
                           std::span<const uint64_t> costs) {
    check(s >= 1 && s <= l, "need 1 <= s <= l");
    check(list_caps.size() == s && costs.size() == s, "need one cap and one cost per step");
    for (uint64_t d : list_caps) check(d >= 1, "list caps must be positive");
    for (uint64_t r : costs) check(r >= 1, "costs must be positive");
    BigInt inner = list_caps[0];
    BigInt prefix = list_caps[0];
    for (uint64_t i = 1; i < s; ++i) {
        inner += prefix * costs[i];
        prefix *= list_caps[i];
    }
    BigInt fact = 1;
    for (uint64_t i = 2; i <= s; ++i) fact *= i;
    return fact * binomial(l, s) * inner;
}

} // namespace mpc
