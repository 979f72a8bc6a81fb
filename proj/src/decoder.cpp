#include "mpc/decoder.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mpc/unit_mpc.hpp"

namespace mpc {

uint64_t tau_bound(size_t l, std::span<const uint64_t> taus) {
    size_t s = taus.size();
    check(s >= 1 && s <= l, "need 1 <= s <= l constituent radii");
    uint64_t best = UINT64_MAX;
    for (size_t j = 0; j < s; ++j) {
        uint64_t lj = static_cast<uint64_t>(l - j);  // l - (j+1) + 1
        best = std::min(best, lj * taus[j] + (lj - 1));
    }
    return best;
}

std::optional<std::vector<size_t>> good_index_tuple(std::span<const uint64_t> block_weights,
                                                    std::span<const uint64_t> taus, uint64_t tau) {
    size_t l = block_weights.size(), s = taus.size();
    check(s >= 1 && s <= l, "need 1 <= s <= l block weights");
    std::vector<size_t> byw(l);
    std::iota(byw.begin(), byw.end(), size_t{0});
    std::sort(byw.begin(), byw.end(), [&](size_t a, size_t b) {
        return std::pair(block_weights[a], a) < std::pair(block_weights[b], b);
    });
    std::vector<size_t> slot(s);
    std::iota(slot.begin(), slot.end(), size_t{0});
    std::sort(slot.begin(), slot.end(), [&](size_t a, size_t b) {
        return std::pair(taus[a], a) < std::pair(taus[b], b);
    });
    // lightest available block into the tightest slot; complete because
    // replacing any witness's blocks by the lightest ones keeps it a witness
    std::vector<size_t> tuple(s);
    for (size_t j = 0; j < s; ++j) {
        if (block_weights[byw[j]] > taus[slot[j]]) {
            uint64_t total = std::accumulate(block_weights.begin(), block_weights.end(), uint64_t{0});
            require(total > tau, "an error pattern within the radius must admit a good index tuple");
            return std::nullopt;
        }
        tuple[slot[j]] = byw[j];
    }
    return tuple;
}

BlockDecoder gs_block_decoder(const RSCode& code, uint64_t v) {
    GSParams gp = gs_params(code.length(), code.dim(), v);
    BlockDecoder b;
    b.tau = gp.tau;
    b.list_cap = gp.list_cap;
    b.decode = [code, v](std::span<const uint32_t> r) { return gs_list_decode(code, r, v); };
    return b;
}

BlockDecoder bruteforce_block_decoder(const LinearCode& code, uint64_t tau, uint64_t enum_cap) {
    BlockDecoder b;
    b.tau = tau;
    b.list_cap = 0;
    b.decode = [code, tau, enum_cap](std::span<const uint32_t> r) {
        return code.list_decode_bruteforce(r, tau, enum_cap);
    };
    return b;
}

namespace {

struct ScalarAlg {
    const Field& f;
    size_t m;
    using Coeff = uint32_t;
    const Field& field() const { return f; }
    bool is_zero(Coeff c) const { return c == 0; }
    bool invertible(Coeff c) const { return c != 0; }
    Coeff div(Coeff a, Coeff b) const { return f.div(a, b); }
    Coeff mul(Coeff a, Coeff b) const { return f.mul(a, b); }
    Coeff sub(Coeff a, Coeff b) const { return f.sub(a, b); }
    void submul(std::span<uint32_t> t, Coeff c, std::span<const uint32_t> s) const {
        for (size_t i = 0; i < m; ++i)
            if (s[i]) t[i] = f.sub(t[i], f.mul(c, s[i]));
    }
    void addmul(std::span<uint32_t> t, Coeff c, std::span<const uint32_t> s) const {
        for (size_t i = 0; i < m; ++i)
            if (s[i]) t[i] = f.add(t[i], f.mul(c, s[i]));
    }
    // c^{-1} * s
    std::vector<uint32_t> unscale(Coeff c, std::span<const uint32_t> s) const {
        uint32_t ci = f.inv(c);
        std::vector<uint32_t> out(m);
        for (size_t i = 0; i < m; ++i) out[i] = f.mul(ci, s[i]);
        return out;
    }
};

struct RingAlg {
    const Field& f;
    size_t m;
    using Coeff = RingElem;
    const Field& field() const { return f; }
    bool is_zero(const Coeff& c) const { return c.is_zero(); }
    bool invertible(const Coeff& c) const { return c.is_unit(); }
    Coeff div(const Coeff& a, const Coeff& b) const { return a * b.inv(); }
    Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
    Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
    void submul(std::span<uint32_t> t, const Coeff& c, std::span<const uint32_t> s) const {
        RingElem prod = c * RingElem(f, m, s);
        for (size_t i = 0; i < m; ++i) t[i] = f.sub(t[i], prod.coeffs()[i]);
    }
    void addmul(std::span<uint32_t> t, const Coeff& c, std::span<const uint32_t> s) const {
        RingElem prod = c * RingElem(f, m, s);
        for (size_t i = 0; i < m; ++i) t[i] = f.add(t[i], prod.coeffs()[i]);
    }
    std::vector<uint32_t> unscale(const Coeff& c, std::span<const uint32_t> s) const {
        return (c.inv() * RingElem(f, m, s)).coeffs();
    }
};

template <class Alg>
DecodeOutput decode_core(const Alg& alg, size_t m, size_t l,
                         const std::vector<std::vector<typename Alg::Coeff>>& a,
                         const std::vector<BlockDecoder>& ldcs,
                         const std::vector<std::function<bool(std::span<const uint32_t>)>>& member,
                         uint64_t tau_eff, std::span<const uint32_t> received,
                         const DecodeOptions& options) {
    using Coeff = typename Alg::Coeff;
    const size_t s = ldcs.size();
    const Field& f = alg.field();
    DecodeOutput out;
    std::set<std::vector<uint32_t>> results;

    struct Branch {
        std::vector<uint32_t> blocks;           // working received word, length m*l
        std::vector<std::vector<uint32_t>> errs;  // error estimate per consumed block
    };

    auto process_tuple = [&](const std::vector<size_t>& tuple) {
        auto aw = a;  // working matrix copy for this tuple
        std::vector<char> consumed(l, 0);
        std::vector<Branch> branches;
        branches.push_back({std::vector<uint32_t>(received.begin(), received.end()), {}});
        TupleTrace tt;
        tt.tuple = tuple;

        for (size_t j = 0; j < s && !branches.empty(); ++j) {
            size_t ij = tuple[j];
            const Coeff& pivot = aw[j][ij];
            require(alg.invertible(pivot), "elimination pivot must be invertible");
            // per-column multipliers, shared across branches
            std::vector<std::optional<Coeff>> coef(l);
            for (size_t i = 0; i < l; ++i)
                if (!consumed[i] && i != ij) coef[i] = alg.div(aw[j][i], pivot);

            StepTrace st;
            st.step = j + 1;
            st.block = ij;
            std::vector<Branch> next;
            for (size_t b = 0; b < branches.size(); ++b) {
                auto list = ldcs[j].decode(
                    std::span<const uint32_t>(branches[b].blocks.data() + ij * m, m));
                if (options.trace) st.branches.push_back({b, list});
                for (const auto& ell : list) {
                    Branch nb = branches[b];
                    std::vector<uint32_t> err(m);
                    for (size_t t = 0; t < m; ++t) err[t] = f.sub(nb.blocks[ij * m + t], ell[t]);
                    nb.errs.push_back(std::move(err));
                    for (size_t i = 0; i < l; ++i)
                        if (coef[i] && !alg.is_zero(*coef[i]))
                            alg.submul(std::span<uint32_t>(nb.blocks.data() + i * m, m), *coef[i],
                                       ell);
                    std::copy(ell.begin(), ell.end(),
                              nb.blocks.begin() + static_cast<ptrdiff_t>(ij * m));
                    next.push_back(std::move(nb));
                }
            }
            if (options.trace) tt.steps.push_back(std::move(st));
            consumed[ij] = 1;
            for (size_t i = 0; i < l; ++i) {
                if (!coef[i] || alg.is_zero(*coef[i])) continue;
                for (size_t r = 0; r < s; ++r)
                    aw[r][i] = alg.sub(aw[r][i], alg.mul(*coef[i], aw[r][ij]));
            }
            branches = std::move(next);
        }

        for (const auto& br : branches) {
            ++tt.survivors;
            // solve sum_j a_{j,i_t} c_j = (received block i_t) - err_t over
            // t = 1..s with the original matrix; eliminating in tuple order
            // replays the per-step column operations, so pivot t equals the
            // step-t working pivot and is invertible
            std::vector<std::vector<Coeff>> g(s);
            for (size_t t = 0; t < s; ++t)
                for (size_t jj = 0; jj < s; ++jj) g[t].push_back(a[jj][tuple[t]]);
            std::vector<std::vector<uint32_t>> rhs(s);
            for (size_t t = 0; t < s; ++t) {
                rhs[t].assign(received.begin() + static_cast<ptrdiff_t>(tuple[t] * m),
                              received.begin() + static_cast<ptrdiff_t>((tuple[t] + 1) * m));
                for (size_t c = 0; c < m; ++c) rhs[t][c] = f.sub(rhs[t][c], br.errs[t][c]);
            }
            for (size_t t = 0; t < s; ++t) {
                require(alg.invertible(g[t][t]), "final solve pivot must be invertible");
                for (size_t r = t + 1; r < s; ++r) {
                    if (alg.is_zero(g[r][t])) continue;
                    Coeff factor = alg.div(g[r][t], g[t][t]);
                    for (size_t c = t; c < s; ++c)
                        g[r][c] = alg.sub(g[r][c], alg.mul(factor, g[t][c]));
                    alg.submul(std::span<uint32_t>(rhs[r].data(), m), factor, rhs[t]);
                }
            }
            std::vector<std::vector<uint32_t>> cblk(s);
            for (size_t t = s; t-- > 0;) {
                std::vector<uint32_t> acc = rhs[t];
                for (size_t c = t + 1; c < s; ++c)
                    alg.submul(std::span<uint32_t>(acc.data(), m), g[t][c], cblk[c]);
                cblk[t] = alg.unscale(g[t][t], acc);
            }

            bool ok = true;
            for (size_t t = 0; t < s && ok; ++t) ok = member[t](cblk[t]);
            if (!ok) continue;

            std::vector<uint32_t> word(m * l, 0);
            for (size_t i = 0; i < l; ++i)
                for (size_t t = 0; t < s; ++t)
                    if (!alg.is_zero(a[t][i]))
                        alg.addmul(std::span<uint32_t>(word.data() + i * m, m), a[t][i], cblk[t]);
            if (hamming_distance(word, received) <= tau_eff) {
                ++tt.accepted;
                results.insert(std::move(word));
            }
        }
        if (options.trace) out.traces.push_back(std::move(tt));
    };

    // all ordered tuples of distinct block indices, lexicographic
    std::vector<size_t> tuple(s);
    std::vector<char> used(l, 0);
    bool stop = false;
    auto sweep = [&](auto&& self, size_t depth) -> void {
        if (stop) return;
        if (depth == s) {
            process_tuple(tuple);
            if (options.first_hit && !results.empty()) stop = true;
            return;
        }
        for (size_t i = 0; i < l && !stop; ++i) {
            if (used[i]) continue;
            used[i] = 1;
            tuple[depth] = i;
            self(self, depth + 1);
            used[i] = 0;
        }
    };
    sweep(sweep, 0);

    out.words.assign(results.begin(), results.end());
    return out;
}

// shift-closure of the row space: block codewords must stay codewords under
// ring multiplication for the per-step lists to live in the right constituent
bool cyclic_closed(const LinearCode& c) {
    size_t m = c.length();
    std::vector<uint32_t> rot(m);
    for (size_t r = 0; r < c.dim(); ++r) {
        for (size_t i = 0; i < m; ++i) rot[(i + 1) % m] = c.generator().at(r, i);
        if (!c.contains(rot)) return false;
    }
    return true;
}

BlockDecoder make_block_decoder(const Field& f, const LinearCode& c, uint64_t v,
                                std::optional<uint64_t> tau_override) {
    if (!tau_override && c.dim() >= 2 && c.dim() < c.length()) {
        if (auto rs = detect_rs_structure(f, c)) return gs_block_decoder(*rs, v);
    }
    uint64_t tau = tau_override ? *tau_override : (c.min_distance() - 1) / 2;
    return bruteforce_block_decoder(c, tau);
}

} // namespace

DecoderSpec DecoderSpec::for_scalar(const ScalarMPC& code, std::span<const uint64_t> multiplicities,
                                    std::span<const std::optional<uint64_t>> tau_fallback) {
    check(code.nonsingular_by_columns(), "decoding needs a matrix nonsingular by columns");
    check(code.nested(), "decoding needs nested constituents");
    check(multiplicities.size() == code.s(), "one multiplicity per constituent");
    check(tau_fallback.empty() || tau_fallback.size() == code.s(),
          "per-constituent radius overrides must match the constituent count");
    DecoderSpec d;
    d.f_ = &code.field();
    d.scalar_ = &code;
    d.m_ = code.block_length();
    d.l_ = code.l();
    for (size_t j = 0; j < code.s(); ++j) {
        std::optional<uint64_t> tf = tau_fallback.empty() ? std::nullopt : tau_fallback[j];
        d.ldcs_.push_back(make_block_decoder(code.field(), code.constituent(j), multiplicities[j], tf));
        d.taus_.push_back(d.ldcs_.back().tau);
        d.member_.push_back(
            [&code, j](std::span<const uint32_t> w) { return code.constituent(j).contains(w); });
    }
    d.tau_ = tau_bound(d.l_, d.taus_);
    return d;
}

DecoderSpec DecoderSpec::for_unit(const UnitMPC& code, std::span<const uint64_t> multiplicities,
                                  std::span<const std::optional<uint64_t>> tau_fallback) {
    check(code.unit_by_columns(), "decoding needs a matrix unit by columns");
    check(code.nested(), "decoding needs nested constituents");
    check(multiplicities.size() == code.s(), "one multiplicity per constituent");
    check(tau_fallback.empty() || tau_fallback.size() == code.s(),
          "per-constituent radius overrides must match the constituent count");
    DecoderSpec d;
    d.f_ = &code.field();
    d.unit_ = &code;
    d.m_ = code.block_length();
    d.l_ = code.l();
    for (size_t j = 0; j < code.s(); ++j) {
        const LinearCode& c = code.constituent(j);
        check(cyclic_closed(c), "constituents must be cyclic");
        std::optional<uint64_t> tf = tau_fallback.empty() ? std::nullopt : tau_fallback[j];
        d.ldcs_.push_back(make_block_decoder(code.field(), c, multiplicities[j], tf));
        d.taus_.push_back(d.ldcs_.back().tau);
        d.member_.push_back(
            [&code, j](std::span<const uint32_t> w) { return code.constituent(j).contains(w); });
    }
    d.tau_ = tau_bound(d.l_, d.taus_);
    return d;
}

DecodeOutput DecoderSpec::list_decode(std::span<const uint32_t> received,
                                      const DecodeOptions& options) const {
    check(received.size() == length(), "received word length must equal the code length");
    uint64_t tau_eff = options.tau_override.value_or(tau_);
    if (scalar_) {
        ScalarAlg alg{*f_, m_};
        std::vector<std::vector<uint32_t>> a(s(), std::vector<uint32_t>(l_));
        for (size_t j = 0; j < s(); ++j)
            for (size_t i = 0; i < l_; ++i) a[j][i] = scalar_->matrix().at(j, i);
        return decode_core(alg, m_, l_, a, ldcs_, member_, tau_eff, received, options);
    }
    require(unit_ != nullptr, "decoder spec must wrap a code");
    RingAlg alg{*f_, m_};
    std::vector<std::vector<RingElem>> a;
    for (size_t j = 0; j < s(); ++j) {
        std::vector<RingElem> row;
        for (size_t i = 0; i < l_; ++i) row.push_back(unit_->matrix().at(j, i));
        a.push_back(std::move(row));
    }
    return decode_core(alg, m_, l_, a, ldcs_, member_, tau_eff, received, options);
}

std::optional<std::vector<uint32_t>> DecoderSpec::unique_decode(std::span<const uint32_t> received,
                                                                uint64_t dmin) const {
    check(dmin >= 1, "minimum distance must be positive");
    DecodeOptions o;
    o.first_hit = true;
    o.tau_override = std::min(tau_, (dmin - 1) / 2);
    DecodeOutput out = list_decode(received, o);
    require(out.words.size() <= 1, "half-distance ball cannot hold two codewords");
    if (out.words.empty()) return std::nullopt;
    return out.words[0];
}

} // namespace mpc
