#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpc/linear_code.hpp"
#include "mpc/mat.hpp"

namespace mpc {

/// True when every t x t minor built from the first t rows and any t columns
/// (in increasing order) is nonsingular, for t = 1..rows.
bool is_nonsingular_by_columns(const Field& f, const Mat& a);

/// Matrix-product code [C_1 ... C_s] * A: s constituent codes of equal length
/// m over one field, combined by an s x l matrix A of scalars. Codewords are
/// length m*l, block-major: block i is sum_j a_{j,i} c_j.
class ScalarMPC {
public:
    /// Constituents must all have length m over f; A must be s x l, s <= l,
    /// full row rank.
    ScalarMPC(const Field& f, std::vector<LinearCode> constituents, Mat a);

    const Field& field() const { return *f_; }
    size_t s() const { return a_.rows; }
    size_t l() const { return a_.cols; }
    size_t block_length() const { return m_; }
    size_t length() const { return m_ * a_.cols; }
    size_t dim() const { return k_; }
    const Mat& matrix() const { return a_; }
    const LinearCode& constituent(size_t j) const { return cs_[j]; }

    bool nonsingular_by_columns() const { return nsc_; }
    /// C_1 >= C_2 >= ... >= C_s as sets.
    bool nested() const { return nested_; }

    /// msgs[j] is the message for constituent j (length k_j).
    std::vector<uint32_t> encode(const std::vector<std::vector<uint32_t>>& msgs) const;

    /// Minimum distances d_i of the constituents (known values or brute force).
    std::vector<uint64_t> constituent_distances(uint64_t enum_cap = 1ull << 24) const;
    /// Minimum distances D_i of the length-l codes spanned by rows 1..i of A.
    std::vector<uint64_t> row_span_distances() const;
    /// min_i d_i * D_i; a lower bound on the distance for any A.
    uint64_t distance_lower_bound(uint64_t enum_cap = 1ull << 24) const;
    /// min_i (l - i + 1) * d_i; exact for nested constituents with A
    /// nonsingular by columns (throws otherwise).
    uint64_t distance_nested_nsc(uint64_t enum_cap = 1ull << 24) const;

    /// Generator of the full [m*l, k] code (for exhaustive checks).
    LinearCode to_linear_code() const;

private:
    const Field* f_;
    std::vector<LinearCode> cs_;
    Mat a_;
    size_t m_, k_;
    bool nsc_, nested_;
};

} // namespace mpc
