#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpc/mat.hpp"
#include "mpc/poly.hpp"

namespace mpc {

/// Linear [n, k] code over a Field given by a full-rank generator matrix.
/// The Field must outlive the code.
class LinearCode {
public:
    static LinearCode from_generator(const Field& f, Mat g);
    /// Cyclic code of length m generated by gen; gen must divide x^m - 1 and
    /// have degree strictly between 0 and m. Generator rows are x^i * gen.
    static LinearCode cyclic_code(const Field& f, const Poly& gen, size_t m);

    const Field& field() const { return *f_; }
    size_t length() const { return g_.cols; }
    size_t dim() const { return g_.rows; }
    const Mat& generator() const { return g_; }
    /// Set when built via cyclic_code.
    const std::optional<Poly>& cyclic_generator() const { return gen_; }

    /// Distance when known in closed form (set by constructions that know it).
    std::optional<uint64_t> known_distance() const { return known_distance_; }
    void set_known_distance(uint64_t d) { known_distance_ = d; }
    /// Known distance if available, else exhaustive search (q^k must be
    /// within cap).
    uint64_t min_distance(uint64_t enum_cap = 1ull << 24, unsigned threads = 1) const;

    std::vector<uint32_t> encode(std::span<const uint32_t> msg) const;
    bool contains(std::span<const uint32_t> word) const;
    static bool is_subcode(const LinearCode& inner, const LinearCode& outer);

    /// Exhaustive minimum weight over all q^k - 1 nonzero codewords, walking
    /// messages in an order that changes one symbol per step.
    uint64_t min_distance_bruteforce(uint64_t enum_cap = 1ull << 24, unsigned threads = 1) const;
    /// All codewords within distance tau of received, sorted lexicographically.
    std::vector<std::vector<uint32_t>> list_decode_bruteforce(std::span<const uint32_t> received,
                                                              uint64_t tau,
                                                              uint64_t enum_cap = 1ull << 24) const;
    /// Number of codewords, or nullopt if it overflows the cap comparison.
    std::optional<uint64_t> codeword_count(uint64_t cap) const;

private:
    LinearCode(const Field& f, Mat g);
    const Field* f_;
    Mat g_;
    Mat rref_;
    std::vector<size_t> pivots_;
    std::optional<Poly> gen_;
    std::optional<uint64_t> known_distance_;
};

} // namespace mpc
