#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpc/linear_code.hpp"
#include "mpc/poly.hpp"

namespace mpc {

/// Multiplicity-v list decoding parameters for an [m, k] Reed-Solomon code:
/// r is the unique integer with C(r,2) <= m*C(v+1,2)/(k-1) < C(r+1,2),
/// l = floor(m*C(v+1,2)/r + (r-1)(k-1)/2), tau = m - floor(l/v) - 1, and the
/// output list size is at most list_cap = floor(l/(k-1)).
struct GSParams {
    uint64_t m, k, v;
    uint64_t r;
    uint64_t l;
    uint64_t tau;
    uint64_t list_cap;
};

GSParams gs_params(uint64_t m, uint64_t k, uint64_t v);

/// [q-1, k] Reed-Solomon code. Codewords are stored in the cyclic coefficient
/// view: a codeword vector c, read as the polynomial sum c_i x^i, vanishes on
/// the root window alpha^w, ..., alpha^(w+m-k-1). For the narrow-sense default
/// (w = 1) the coefficient view coincides with the evaluation view, i.e. the
/// vector (g(alpha^0), ..., g(alpha^(m-1))) for deg g < k; other windows
/// differ from it by the diagonal isometry c_i -> c_i * alpha^((w-1)i).
class RSCode {
public:
    RSCode(const Field& f, size_t k, size_t window_start = 1);

    const Field& field() const { return *f_; }
    size_t length() const { return m_; }
    size_t dim() const { return k_; }
    size_t min_distance() const { return m_ - k_ + 1; }
    size_t window_start() const { return w_; }

    /// msg holds the k coefficients of the evaluation polynomial, low-to-high.
    std::vector<uint32_t> encode(std::span<const uint32_t> msg) const;
    bool contains(std::span<const uint32_t> word) const;
    LinearCode to_linear_code() const;
    /// prod_{j in window} (x - alpha^j); codeword polynomials are exactly the
    /// multiples of it below degree m.
    Poly generator_poly() const;

private:
    const Field* f_;
    size_t m_, k_, w_;
};

/// All codewords within gs_params(m, k, v).tau of received, sorted
/// lexicographically.
std::vector<std::vector<uint32_t>> gs_list_decode(const RSCode& code,
                                                  std::span<const uint32_t> received, uint64_t v);

/// If gen splits into deg(gen) distinct roots alpha^j forming one consecutive
/// run mod (q-1), returns the run's start; otherwise nullopt. Cyclic codes of
/// length q-1 whose generator passes this test are Reed-Solomon codes with
/// that window.
std::optional<size_t> consecutive_root_window(const Field& f, const Poly& gen);

/// Recognizes a length-(q-1) linear code as a window-view RS code: first via
/// its cyclic generator's root window when one is recorded, else by testing
/// the generator rows against every window. nullopt when no window matches.
std::optional<RSCode> detect_rs_structure(const Field& f, const LinearCode& code);

} // namespace mpc
