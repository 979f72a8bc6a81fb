#include "mpc/mat.hpp"

namespace mpc {

Mat Mat::from_rows(const std::vector<std::vector<uint32_t>>& rows_in) {
    Mat m;
    m.rows = rows_in.size();
    m.cols = rows_in.empty() ? 0 : rows_in[0].size();
    m.a.reserve(m.rows * m.cols);
    for (const auto& r : rows_in) {
        check(r.size() == m.cols, "ragged matrix rows");
        m.a.insert(m.a.end(), r.begin(), r.end());
    }
    return m;
}

size_t rref(const Field& f, Mat& m, std::vector<size_t>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t pivot = r;
        while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != r)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        uint32_t inv = f.inv(m.at(r, c));
        for (size_t j = c; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint32_t factor = m.at(i, c);
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return r;
}

size_t rank(const Field& f, Mat m) { return rref(f, m); }

uint32_t determinant(const Field& f, Mat m) {
    check(m.rows == m.cols, "determinant of non-square matrix");
    uint32_t det = 1;
    for (size_t c = 0; c < m.cols; ++c) {
        size_t pivot = c;
        while (pivot < m.rows && m.at(pivot, c) == 0) ++pivot;
        if (pivot == m.rows) return 0;
        if (pivot != c) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, m.at(c, c));
        uint32_t inv = f.inv(m.at(c, c));
        for (size_t i = c + 1; i < m.rows; ++i) {
            if (m.at(i, c) == 0) continue;
            uint32_t factor = f.mul(m.at(i, c), inv);
            for (size_t j = c; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(c, j)));
        }
    }
    return det;
}

std::optional<std::vector<uint32_t>> null_vector(const Field& f, Mat m) {
    std::vector<size_t> pivots;
    rref(f, m, &pivots);
    // find a free column
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t free_col = m.cols;
    for (size_t c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == m.cols) return std::nullopt;
    // back-substitute with the free variable set to 1
    std::vector<uint32_t> v(m.cols, 0);
    v[free_col] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = f.neg(m.at(i, free_col));
    return v;
}

} // namespace mpc
