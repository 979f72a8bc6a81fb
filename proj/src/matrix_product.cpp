#include "mpc/matrix_product.hpp"

#include <algorithm>

namespace mpc {

namespace {

// increasing column tuples, determinant of the first-t-rows submatrix
bool minors_nonsingular(const Field& f, const Mat& a, size_t t, size_t next, std::vector<size_t>& cols) {
    if (cols.size() == t) {
        Mat sub(t, t);
        for (size_t r = 0; r < t; ++r)
            for (size_t c = 0; c < t; ++c) sub.at(r, c) = a.at(r, cols[c]);
        return determinant(f, std::move(sub)) != 0;
    }
    for (size_t c = next; c < a.cols; ++c) {
        cols.push_back(c);
        if (!minors_nonsingular(f, a, t, c + 1, cols)) return false;
        cols.pop_back();
    }
    return true;
}

} // namespace

bool is_nonsingular_by_columns(const Field& f, const Mat& a) {
    check(a.rows >= 1 && a.rows <= a.cols, "matrix must be s x l with s <= l");
    for (size_t t = 1; t <= a.rows; ++t) {
        std::vector<size_t> cols;
        if (!minors_nonsingular(f, a, t, 0, cols)) return false;
    }
    return true;
}

ScalarMPC::ScalarMPC(const Field& f, std::vector<LinearCode> constituents, Mat a)
    : f_(&f), cs_(std::move(constituents)), a_(std::move(a)) {
    check(!cs_.empty(), "need at least one constituent code");
    check(a_.rows == cs_.size(), "matrix must have one row per constituent");
    check(a_.rows <= a_.cols, "matrix must be s x l with s <= l");
    for (uint32_t v : a_.a) check(v < f.size(), "matrix entry out of range");
    m_ = cs_[0].length();
    k_ = 0;
    for (const auto& c : cs_) {
        check(c.field().same(f), "constituent over a different field");
        check(c.length() == m_, "constituents must share one length");
        k_ += c.dim();
    }
    check(rank(f, a_) == a_.rows, "matrix must have full row rank");
    nsc_ = is_nonsingular_by_columns(f, a_);
    nested_ = true;
    for (size_t j = 0; j + 1 < cs_.size() && nested_; ++j)
        nested_ = LinearCode::is_subcode(cs_[j + 1], cs_[j]);
}

std::vector<uint32_t> ScalarMPC::encode(const std::vector<std::vector<uint32_t>>& msgs) const {
    check(msgs.size() == s(), "need one message per constituent");
    const Field& f = *f_;
    std::vector<uint32_t> word(length(), 0);
    for (size_t j = 0; j < s(); ++j) {
        auto cj = cs_[j].encode(msgs[j]);
        for (size_t i = 0; i < l(); ++i) {
            uint32_t aji = a_.at(j, i);
            if (aji == 0) continue;
            for (size_t t = 0; t < m_; ++t)
                if (cj[t] != 0) word[i * m_ + t] = f.add(word[i * m_ + t], f.mul(aji, cj[t]));
        }
    }
    return word;
}

std::vector<uint64_t> ScalarMPC::constituent_distances(uint64_t enum_cap) const {
    std::vector<uint64_t> d;
    d.reserve(s());
    for (const auto& c : cs_) d.push_back(c.min_distance(enum_cap));
    return d;
}

std::vector<uint64_t> ScalarMPC::row_span_distances() const {
    std::vector<uint64_t> out;
    out.reserve(s());
    for (size_t i = 1; i <= s(); ++i) {
        Mat rows(i, l());
        for (size_t r = 0; r < i; ++r)
            for (size_t c = 0; c < l(); ++c) rows.at(r, c) = a_.at(r, c);
        LinearCode span = LinearCode::from_generator(*f_, std::move(rows));
        out.push_back(span.min_distance_bruteforce());
    }
    return out;
}

uint64_t ScalarMPC::distance_lower_bound(uint64_t enum_cap) const {
    auto d = constituent_distances(enum_cap);
    auto dd = row_span_distances();
    uint64_t best = UINT64_MAX;
    for (size_t i = 0; i < s(); ++i) best = std::min(best, d[i] * dd[i]);
    return best;
}

uint64_t ScalarMPC::distance_nested_nsc(uint64_t enum_cap) const {
    check(nested_, "exact distance formula needs nested constituents");
    check(nsc_, "exact distance formula needs a matrix nonsingular by columns");
    auto d = constituent_distances(enum_cap);
    uint64_t best = UINT64_MAX;
    for (size_t i = 0; i < s(); ++i)
        best = std::min(best, static_cast<uint64_t>(l() - i) * d[i]);
    return best;
}

LinearCode ScalarMPC::to_linear_code() const {
    Mat g(k_, length());
    size_t row = 0;
    const Field& f = *f_;
    for (size_t j = 0; j < s(); ++j) {
        const Mat& gj = cs_[j].generator();
        for (size_t r = 0; r < gj.rows; ++r, ++row) {
            for (size_t i = 0; i < l(); ++i) {
                uint32_t aji = a_.at(j, i);
                if (aji == 0) continue;
                for (size_t t = 0; t < m_; ++t)
                    g.at(row, i * m_ + t) = f.mul(aji, gj.at(r, t));
            }
        }
    }
    return LinearCode::from_generator(f, std::move(g));
}

} // namespace mpc
