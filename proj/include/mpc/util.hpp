#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpc {

// Raised when text input (element tokens, polynomials, spec files) is malformed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a mathematical precondition fails (reducible modulus, singular
// generator, non-unit divisor, mismatched fields, ...).
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a property the theory guarantees is violated at run time; seeing
// one of these means a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw invariant_error(msg);
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Deterministic per-trial stream: the state depends only on (seed, index), so
// trial loops can be split across threads without changing results.
inline std::mt19937_64 trial_rng(uint64_t seed, uint64_t index) {
    uint64_t s0 = splitmix64(seed ^ 0x1234567890abcdefull);
    uint64_t s1 = splitmix64(s0 + index);
    return std::mt19937_64(splitmix64(s1));
}

// Runs fn(begin, end, chunk_index) over [0, n) split into roughly equal chunks,
// one thread per chunk. threads <= 1 runs inline.
void parallel_chunks(uint64_t n, unsigned threads,
                     const std::function<void(uint64_t, uint64_t, unsigned)>& fn);

inline uint64_t hamming_weight(std::span<const uint32_t> w) {
    uint64_t c = 0;
    for (uint32_t v : w) c += (v != 0);
    return c;
}

inline uint64_t hamming_distance(std::span<const uint32_t> a, std::span<const uint32_t> b) {
    require(a.size() == b.size(), "hamming_distance: length mismatch");
    uint64_t c = 0;
    for (size_t i = 0; i < a.size(); ++i) c += (a[i] != b[i]);
    return c;
}

std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);

} // namespace mpc
