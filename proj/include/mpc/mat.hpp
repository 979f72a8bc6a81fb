#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpc/field.hpp"

namespace mpc {

/// Row-major matrix of raw field element values.
struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    static Mat from_rows(const std::vector<std::vector<uint32_t>>& rows_in);

    uint32_t& at(size_t r, size_t c) { return a[r * cols + c]; }
    uint32_t at(size_t r, size_t c) const { return a[r * cols + c]; }
    bool operator==(const Mat& o) const = default;
};

/// In-place reduced row echelon form; returns rank, records pivot columns.
size_t rref(const Field& f, Mat& m, std::vector<size_t>* pivot_cols = nullptr);

size_t rank(const Field& f, Mat m);

uint32_t determinant(const Field& f, Mat m);

/// Some nonzero v with m*v = 0, or nullopt if the null space is trivial.
std::optional<std::vector<uint32_t>> null_vector(const Field& f, Mat m);

} // namespace mpc
