#include "mpc/linear_code.hpp"

#include <algorithm>
#include <atomic>

namespace mpc {
namespace {

// Mixed-radix reflected walk over all q^k messages, changing one message
// symbol per step (loopless focus-pointer form). visit(msg, changed_digit,
// old_value) is called after each change; the initial all-zero message is
// visited with changed_digit == k.
template <typename Visit>
void gray_walk(uint64_t q, size_t k, Visit&& visit) {
    std::vector<uint32_t> msg(k, 0);
    std::vector<size_t> focus(k + 1);
    std::vector<int> dir(k, 1);
    for (size_t i = 0; i <= k; ++i) focus[i] = i;
    visit(msg, k, 0u);
    while (true) {
        size_t j = focus[0];
        focus[0] = 0;
        if (j == k) break;
        uint32_t old = msg[j];
        msg[j] = static_cast<uint32_t>(static_cast<int64_t>(msg[j]) + dir[j]);
        if (msg[j] == 0 || msg[j] == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        visit(msg, j, old);
    }
}

uint64_t pow_check(uint64_t q, size_t k, uint64_t cap) {
    uint64_t n = 1;
    for (size_t i = 0; i < k; ++i) {
        if (n > cap / q) return cap + 1;
        n *= q;
    }
    return n;
}

} // namespace

LinearCode::LinearCode(const Field& f, Mat g) : f_(&f), g_(std::move(g)) {
    check(g_.rows >= 1 && g_.cols >= 1, "empty generator");
    check(g_.rows <= g_.cols, "generator has more rows than columns");
    for (uint32_t v : g_.a) check(v < f.size(), "generator entry out of range");
    rref_ = g_;
    size_t r = rref(*f_, rref_, &pivots_);
    check(r == g_.rows, "generator rows are not linearly independent");
}

LinearCode LinearCode::from_generator(const Field& f, Mat g) { return LinearCode(f, std::move(g)); }

LinearCode LinearCode::cyclic_code(const Field& f, const Poly& gen, size_t m) {
    check(gen.field().same(f), "generator polynomial over a different field");
    check(!gen.is_zero() && gen.degree() >= 1, "generator polynomial must be non-constant");
    check(gen.degree() < static_cast<int>(m), "generator degree leaves dimension 0");
    auto [q, r] = Poly::x_pow_minus_one(f, m).divmod(gen);
    check(r.is_zero(), "generator polynomial does not divide x^m - 1");
    size_t k = m - static_cast<size_t>(gen.degree());
    Mat g(k, m);
    for (size_t i = 0; i < k; ++i)
        for (int j = 0; j <= gen.degree(); ++j) g.at(i, i + j) = gen.coeff(j);
    LinearCode code(f, std::move(g));
    code.gen_ = gen;
    return code;
}

std::vector<uint32_t> LinearCode::encode(std::span<const uint32_t> msg) const {
    check(msg.size() == dim(), "message length must equal code dimension");
    std::vector<uint32_t> w(length(), 0);
    for (size_t i = 0; i < dim(); ++i) {
        if (msg[i] == 0) continue;
        for (size_t j = 0; j < length(); ++j)
            if (g_.at(i, j) != 0) w[j] = f_->add(w[j], f_->mul(msg[i], g_.at(i, j)));
    }
    return w;
}

bool LinearCode::contains(std::span<const uint32_t> word) const {
    check(word.size() == length(), "word length must equal code length");
    std::vector<uint32_t> w(word.begin(), word.end());
    for (size_t i = 0; i < pivots_.size(); ++i) {
        uint32_t c = w[pivots_[i]];
        if (c == 0) continue;
        for (size_t j = 0; j < length(); ++j)
            if (rref_.at(i, j) != 0) w[j] = f_->sub(w[j], f_->mul(c, rref_.at(i, j)));
    }
    return std::all_of(w.begin(), w.end(), [](uint32_t v) { return v == 0; });
}

bool LinearCode::is_subcode(const LinearCode& inner, const LinearCode& outer) {
    check(inner.field().same(outer.field()), "codes over different fields");
    check(inner.length() == outer.length(), "codes of different length");
    for (size_t i = 0; i < inner.dim(); ++i) {
        std::span<const uint32_t> row(inner.g_.a.data() + i * inner.g_.cols, inner.g_.cols);
        if (!outer.contains(row)) return false;
    }
    return true;
}

std::optional<uint64_t> LinearCode::codeword_count(uint64_t cap) const {
    uint64_t n = pow_check(f_->size(), dim(), cap);
    if (n > cap) return std::nullopt;
    return n;
}

uint64_t LinearCode::min_distance(uint64_t enum_cap, unsigned threads) const {
    if (known_distance_) return *known_distance_;
    return min_distance_bruteforce(enum_cap, threads);
}

uint64_t LinearCode::min_distance_bruteforce(uint64_t enum_cap, unsigned threads) const {
    check(codeword_count(enum_cap).has_value(), "codeword enumeration exceeds cap");
    const Field& f = *f_;
    uint64_t q = f.size();
    size_t k = dim(), n = length();

    // chunk = fixed value of the last message symbol, walk over the rest
    auto chunk_min = [&](uint32_t last) {
        std::vector<uint32_t> word(n, 0);
        if (last != 0)
            for (size_t j = 0; j < n; ++j)
                if (g_.at(k - 1, j) != 0) word[j] = f.mul(last, g_.at(k - 1, j));
        uint64_t best = UINT64_MAX;
        bool first = true;
        gray_walk(q, k - 1, [&](const std::vector<uint32_t>& msg, size_t changed, uint32_t old) {
            if (changed < k - 1) {
                uint32_t delta = f.sub(msg[changed], old);
                for (size_t j = 0; j < n; ++j)
                    if (g_.at(changed, j) != 0)
                        word[j] = f.add(word[j], f.mul(delta, g_.at(changed, j)));
            }
            if (first && last == 0) {
                first = false;  // all-zero codeword
                return;
            }
            uint64_t w = hamming_weight(word);
            if (w < best) best = w;
        });
        return best;
    };

    if (k == 1) {
        uint64_t best = UINT64_MAX;
        for (uint64_t v = 1; v < q; ++v) best = std::min(best, chunk_min(static_cast<uint32_t>(v)) );
        return best;
    }

    std::vector<uint64_t> results(q, UINT64_MAX);
    parallel_chunks(q, threads, [&](uint64_t b, uint64_t e, unsigned) {
        for (uint64_t v = b; v < e; ++v) results[v] = chunk_min(static_cast<uint32_t>(v));
    });
    return *std::min_element(results.begin(), results.end());
}

std::vector<std::vector<uint32_t>> LinearCode::list_decode_bruteforce(std::span<const uint32_t> received,
                                                                      uint64_t tau,
                                                                      uint64_t enum_cap) const {
    check(received.size() == length(), "received word length must equal code length");
    check(codeword_count(enum_cap).has_value(), "codeword enumeration exceeds cap");
    const Field& f = *f_;
    size_t n = length();
    std::vector<uint32_t> word(n, 0);
    std::vector<std::vector<uint32_t>> out;
    gray_walk(f.size(), dim(), [&](const std::vector<uint32_t>& msg, size_t changed, uint32_t old) {
        if (changed < dim()) {
            uint32_t delta = f.sub(msg[changed], old);
            for (size_t j = 0; j < n; ++j)
                if (g_.at(changed, j) != 0) word[j] = f.add(word[j], f.mul(delta, g_.at(changed, j)));
        }
        if (hamming_distance(word, received) <= tau) out.push_back(word);
    });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace mpc
