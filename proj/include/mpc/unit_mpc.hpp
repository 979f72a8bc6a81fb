#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mpc/linear_code.hpp"
#include "mpc/poly.hpp"

namespace mpc {

/// s x l matrix over F_q[x]/(x^m - 1) whose entries are units or zero.
class PolyMatrix {
public:
    PolyMatrix(const Field& f, size_t m, size_t s, size_t l, std::vector<RingElem> entries);

    const Field& field() const { return *f_; }
    size_t rows() const { return s_; }
    size_t cols() const { return l_; }
    size_t modulus_degree() const { return m_; }
    const RingElem& at(size_t r, size_t c) const { return e_[r * l_ + c]; }

    /// Ring determinant (cofactor expansion) of the submatrix given by the
    /// first t rows and columns cols.
    RingElem minor_det(size_t t, std::span<const size_t> cols) const;
    /// Every t x t minor from the first t rows and increasing columns has a
    /// unit determinant, t = 1..s.
    bool unit_by_columns() const;

private:
    const Field* f_;
    size_t m_, s_, l_;
    std::vector<RingElem> e_;
};

/// Quasi-cyclic matrix-product code [C_1 ... C_s] * A where the constituents
/// are cyclic codes of length m (coefficient view) and A has polynomial-unit
/// entries acting by multiplication mod x^m - 1. Codewords are length m*l,
/// block-major: block i is sum_j c_j * a_{j,i} in the ring.
class UnitMPC {
public:
    UnitMPC(const Field& f, std::vector<LinearCode> constituents, PolyMatrix a);

    const Field& field() const { return *f_; }
    size_t s() const { return a_.rows(); }
    size_t l() const { return a_.cols(); }
    size_t block_length() const { return m_; }
    size_t length() const { return m_ * a_.cols(); }
    size_t dim() const { return k_; }
    const PolyMatrix& matrix() const { return a_; }
    const LinearCode& constituent(size_t j) const { return cs_[j]; }
    bool unit_by_columns() const { return ubc_; }
    bool nested() const { return nested_; }

    std::vector<uint32_t> encode(const std::vector<std::vector<uint32_t>>& msgs) const;
    LinearCode to_linear_code() const;

    /// Distance bound min_i d_i * D_i where D_i is the minimum number of
    /// nonzero blocks over the row-module of rows 1..i. D_1 is exact (count
    /// of nonzero first-row entries); higher D_i enumerate q^(m*i) module
    /// elements when that fits the cap and otherwise fall back to the
    /// unit-by-columns lower bound l - i + 1, flagged per term. The bound is
    /// not sharp in general.
    struct DStarTerm {
        uint64_t d_i;
        uint64_t big_d_i;
        bool exact;
    };
    struct DStar {
        uint64_t value;
        std::vector<DStarTerm> terms;
    };
    DStar d_star(uint64_t enum_cap = 1ull << 22) const;

private:
    const Field* f_;
    std::vector<LinearCode> cs_;
    PolyMatrix a_;
    size_t m_, k_;
    bool ubc_, nested_;
};

} // namespace mpc
