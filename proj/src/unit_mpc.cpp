#include "mpc/unit_mpc.hpp"

#include <algorithm>

namespace mpc {

PolyMatrix::PolyMatrix(const Field& f, size_t m, size_t s, size_t l, std::vector<RingElem> entries)
    : f_(&f), m_(m), s_(s), l_(l), e_(std::move(entries)) {
    check(s >= 1 && s <= l, "matrix must be s x l with s <= l");
    check(e_.size() == s * l, "entry count must be s*l");
    for (const auto& e : e_) {
        check(e.field().same(f), "entry over a different field");
        check(e.modulus_degree() == m, "entry from a different ring");
        check(e.is_zero() || e.is_unit(), "entries must be units or zero");
    }
}

RingElem PolyMatrix::minor_det(size_t t, std::span<const size_t> cols) const {
    check(t >= 1 && t <= s_ && cols.size() == t, "bad minor shape");
    // cofactor expansion along the last row (t is small)
    struct Rec {
        const PolyMatrix* self;
        RingElem run(size_t t, std::vector<size_t> cols) const {
            if (t == 1) return self->at(0, cols[0]);
            RingElem acc(self->field(), self->m_);
            for (size_t c = 0; c < t; ++c) {
                const RingElem& pivot = self->at(t - 1, cols[c]);
                if (pivot.is_zero()) continue;
                std::vector<size_t> rest;
                for (size_t i = 0; i < t; ++i)
                    if (i != c) rest.push_back(cols[i]);
                RingElem sub = run(t - 1, std::move(rest));
                RingElem term = pivot * sub;
                // sign (-1)^(t-1+c)
                if ((t - 1 + c) % 2 == 1) acc = acc - term;
                else acc = acc + term;
            }
            return acc;
        }
    };
    return Rec{this}.run(t, std::vector<size_t>(cols.begin(), cols.end()));
}

bool PolyMatrix::unit_by_columns() const {
    for (size_t t = 1; t <= s_; ++t) {
        std::vector<size_t> cols(t);
        // iterate increasing column tuples
        for (size_t i = 0; i < t; ++i) cols[i] = i;
        while (true) {
            if (!minor_det(t, cols).is_unit()) return false;
            size_t i = t;
            while (i > 0 && cols[i - 1] == l_ - t + i - 1) --i;
            if (i == 0) break;
            ++cols[i - 1];
            for (size_t j = i; j < t; ++j) cols[j] = cols[j - 1] + 1;
        }
    }
    return true;
}

UnitMPC::UnitMPC(const Field& f, std::vector<LinearCode> constituents, PolyMatrix a)
    : f_(&f), cs_(std::move(constituents)), a_(std::move(a)) {
    check(!cs_.empty(), "need at least one constituent code");
    check(a_.rows() == cs_.size(), "matrix must have one row per constituent");
    check(a_.field().same(f), "matrix over a different field");
    m_ = a_.modulus_degree();
    k_ = 0;
    for (const auto& c : cs_) {
        check(c.field().same(f), "constituent over a different field");
        check(c.length() == m_, "constituent length must equal the ring modulus degree");
        k_ += c.dim();
    }
    ubc_ = a_.unit_by_columns();
    nested_ = true;
    for (size_t j = 0; j + 1 < cs_.size() && nested_; ++j)
        nested_ = LinearCode::is_subcode(cs_[j + 1], cs_[j]);
}

std::vector<uint32_t> UnitMPC::encode(const std::vector<std::vector<uint32_t>>& msgs) const {
    check(msgs.size() == s(), "need one message per constituent");
    std::vector<uint32_t> word(length(), 0);
    const Field& f = *f_;
    for (size_t j = 0; j < s(); ++j) {
        RingElem cj(f, m_, cs_[j].encode(msgs[j]));
        for (size_t i = 0; i < l(); ++i) {
            if (a_.at(j, i).is_zero()) continue;
            RingElem prod = cj * a_.at(j, i);
            for (size_t t = 0; t < m_; ++t)
                word[i * m_ + t] = f.add(word[i * m_ + t], prod.coeffs()[t]);
        }
    }
    return word;
}

LinearCode UnitMPC::to_linear_code() const {
    Mat g(k_, length());
    const Field& f = *f_;
    size_t row = 0;
    for (size_t j = 0; j < s(); ++j) {
        const Mat& gj = cs_[j].generator();
        for (size_t r = 0; r < gj.rows; ++r, ++row) {
            RingElem base(f, m_, std::span<const uint32_t>(gj.a.data() + r * gj.cols, gj.cols));
            for (size_t i = 0; i < l(); ++i) {
                if (a_.at(j, i).is_zero()) continue;
                RingElem prod = base * a_.at(j, i);
                for (size_t t = 0; t < m_; ++t) g.at(row, i * m_ + t) = prod.coeffs()[t];
            }
        }
    }
    return LinearCode::from_generator(f, std::move(g));
}

UnitMPC::DStar UnitMPC::d_star(uint64_t enum_cap) const {
    const Field& f = *f_;
    DStar out;
    out.value = UINT64_MAX;
    uint64_t ring_size = 1;
    bool ring_fits = true;
    for (size_t t = 0; t < m_; ++t) {
        if (ring_size > enum_cap / f.size()) {
            ring_fits = false;
            break;
        }
        ring_size *= f.size();
    }
    for (size_t i = 1; i <= s(); ++i) {
        uint64_t d_i = cs_[i - 1].min_distance();
        uint64_t big_d = 0;
        bool exact = false;
        if (i == 1) {
            // one generating row of units and zeros: every nonzero multiple
            // keeps exactly the nonzero entries nonzero
            for (size_t c = 0; c < l(); ++c) big_d += !a_.at(0, c).is_zero();
            exact = true;
        } else {
            // enumerate the row module of rows 1..i when q^(m*i) fits the cap
            uint64_t combos = 1;
            bool fits = ring_fits;
            for (size_t t = 0; t < i && fits; ++t) {
                if (combos > enum_cap / ring_size) fits = false;
                else combos *= ring_size;
            }
            if (fits) {
                big_d = UINT64_MAX;
                std::vector<uint64_t> coeffs(i, 0);
                for (uint64_t idx = 1; idx < combos; ++idx) {
                    uint64_t v = idx;
                    for (size_t t = 0; t < i; ++t) {
                        coeffs[t] = v % ring_size;
                        v /= ring_size;
                    }
                    uint64_t wt = 0;
                    for (size_t c = 0; c < l(); ++c) {
                        RingElem acc(f, m_);
                        for (size_t t = 0; t < i; ++t) {
                            if (coeffs[t] == 0 || a_.at(t, c).is_zero()) continue;
                            // unpack ring element index: base-q digits
                            std::vector<uint32_t> u(m_);
                            uint64_t w = coeffs[t];
                            for (size_t d = 0; d < m_; ++d) {
                                u[d] = static_cast<uint32_t>(w % f.size());
                                w /= f.size();
                            }
                            acc = acc + RingElem(f, m_, u) * a_.at(t, c);
                        }
                        wt += !acc.is_zero();
                    }
                    big_d = std::min(big_d, wt);
                }
                exact = true;
            } else {
                big_d = l() - i + 1;  // unit-by-columns lower bound
                exact = false;
            }
        }
        out.terms.push_back({d_i, big_d, exact});
        out.value = std::min(out.value, d_i * big_d);
    }
    return out;
}

} // namespace mpc
