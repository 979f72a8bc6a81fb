#include "doctest.h"

#include <algorithm>

#include "mpc/analysis.hpp"
#include "mpc/codespec.hpp"
#include "mpc/decoder.hpp"

using namespace mpc;

TEST_CASE("decoding radius from per-block radii") {
    const uint64_t a[] = {3, 7};
    CHECK(tau_bound(2, a) == 7);
    const uint64_t b[] = {4};
    CHECK(tau_bound(2, b) == 9);
    const uint64_t c[] = {5};
    CHECK(tau_bound(2, c) == 11);
    const uint64_t d[] = {7};
    CHECK(tau_bound(2, d) == 15);
    const uint64_t e[] = {1, 3};
    CHECK(tau_bound(2, e) == 3);
    const uint64_t g[] = {2, 2, 2};
    // min(3*2+2, 2*2+1, 1*2+0) = 2
    CHECK(tau_bound(3, g) == 2);
}

TEST_CASE("greedy block choice agrees with exhaustive search") {
    const uint64_t taus[] = {1, 3};
    uint64_t tau = tau_bound(3, taus);  // min(3*1+2, 2*3+1) = 5
    CHECK(tau == 5);
    for (uint64_t w0 = 0; w0 <= 9; ++w0)
        for (uint64_t w1 = 0; w1 <= 9; ++w1)
            for (uint64_t w2 = 0; w2 <= 9; ++w2) {
                const uint64_t w[] = {w0, w1, w2};
                bool exists = false;
                for (size_t i = 0; i < 3 && !exists; ++i)
                    for (size_t j = 0; j < 3; ++j)
                        if (i != j && w[i] <= taus[0] && w[j] <= taus[1]) exists = true;
                auto got = good_index_tuple(w, taus, tau);
                CHECK(got.has_value() == exists);
                if (got) {
                    CHECK(got->size() == 2);
                    CHECK((*got)[0] != (*got)[1]);
                    CHECK(w[(*got)[0]] <= taus[0]);
                    CHECK(w[(*got)[1]] <= taus[1]);
                }
                // within the radius a good tuple always exists
                if (w0 + w1 + w2 <= tau) CHECK(got.has_value());
            }
}

TEST_CASE("block decoders return the exact ball") {
    Field f(2, 3);
    RSCode rs(f, 3);
    LinearCode lc = rs.to_linear_code();
    BlockDecoder gs = gs_block_decoder(rs, 1);
    CHECK(gs.tau == 2);
    CHECK(gs.list_cap == 2);
    BlockDecoder brute = bruteforce_block_decoder(lc, 2);
    CHECK(brute.tau == 2);
    for (uint64_t t = 0; t < 25; ++t) {
        auto rng = trial_rng(7, t);
        std::vector<uint32_t> y(7);
        for (auto& v : y) v = static_cast<uint32_t>(uniform_below(rng, 8));
        auto a = gs.decode(y);
        CHECK(a == brute.decode(y));
        CHECK(a == lc.list_decode_bruteforce(y, 2));
    }
}

namespace {

CodeSpec f8_scalar_spec() {
    return parse_code_spec(
        "field p=2 m=3\n"
        "constituent rs k=3 v=1\n"
        "constituent rs k=1\n"
        "matrix rows=2 cols=2\n"
        "row 1, 1\n"
        "row 0, 1\n");
}

CodeSpec f8_unit_spec() {
    return parse_code_spec(
        "field p=2 m=3\n"
        "constituent rs k=3 v=1\n"
        "matrix rows=1 cols=2\n"
        "row 1, x^2 + x + 1\n");
}

std::vector<uint32_t> add_error(const Field& f, std::vector<uint32_t> w,
                                std::span<const uint32_t> e) {
    for (size_t i = 0; i < w.size(); ++i) w[i] = f.add(w[i], e[i]);
    return w;
}

} // namespace

TEST_CASE("scalar product decoder equals the exhaustive ball") {
    CodeSpec cs = f8_scalar_spec();
    const Field& f = *cs.field;
    DecoderSpec dec = cs.decoder();
    CHECK(dec.tau() == 3);
    CHECK(dec.taus()[0] == 2);
    CHECK(dec.taus()[1] == 3);
    LinearCode full = cs.scalar->to_linear_code();
    for (uint64_t t = 0; t < 30; ++t) {
        auto rng = trial_rng(11, t);
        std::vector<uint32_t> msg(cs.dim());
        for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
        uint64_t w = uniform_below(rng, dec.tau() + 1);
        auto y = add_error(f, cs.encode(msg), random_error(rng, f, 14, w));
        auto got = dec.list_decode(y);
        CHECK(got.words == full.list_decode_bruteforce(y, dec.tau()));
    }
}

TEST_CASE("unit product decoder equals the exhaustive ball") {
    CodeSpec cs = f8_unit_spec();
    const Field& f = *cs.field;
    DecoderSpec dec = cs.decoder();
    CHECK(dec.tau() == 5);
    LinearCode full = cs.unit->to_linear_code();
    for (uint64_t t = 0; t < 30; ++t) {
        auto rng = trial_rng(13, t);
        std::vector<uint32_t> msg(cs.dim());
        for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
        uint64_t w = uniform_below(rng, dec.tau() + 1);
        auto y = add_error(f, cs.encode(msg), random_error(rng, f, 14, w));
        auto got = dec.list_decode(y);
        CHECK(got.words == full.list_decode_bruteforce(y, dec.tau()));
    }
}

TEST_CASE("two-level GF(16) decode walks the narrated branches") {
    CodeSpec cs = parse_code_spec(
        "field p=2 m=4\n"
        "constituent rs k=10 v=4\n"
        "constituent rs k=4 v=4\n"
        "matrix rows=2 cols=2\n"
        "row 1, 1\n"
        "row 0, 1\n");
    const Field& f = *cs.field;
    DecoderSpec dec = cs.decoder();
    CHECK(dec.tau() == 7);

    auto block = [&](const char* text) {
        std::vector<uint32_t> out = Poly::parse(f, text).coeffs();
        out.resize(15, 0);
        return out;
    };
    auto p1 = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^13");
    auto p2 = block("a^5*x^2 + a^7*x^6 + a^8*x^10");
    auto chat = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^7 + a^10*x^13 + a^5*x^14");
    std::vector<uint32_t> y;
    y.insert(y.end(), p1.begin(), p1.end());
    y.insert(y.end(), p2.begin(), p2.end());

    DecodeOptions opt;
    opt.trace = true;
    DecodeOutput res = dec.list_decode(y, opt);

    std::vector<uint32_t> zero(30, 0), zero_block(15, 0);
    REQUIRE(std::binary_search(res.words.begin(), res.words.end(), zero));
    CHECK(hamming_distance(zero, y) == 7);
    for (const auto& w : res.words) CHECK(hamming_distance(w, y) <= 7);

    REQUIRE(res.traces.size() == 2);
    // tuple (1,2): the first-stage list at block 1 contains chat, whose branch dies
    const TupleTrace& t12 = res.traces[0];
    REQUIRE(t12.tuple == std::vector<size_t>{0, 1});
    const auto& list12 = t12.steps[0].branches[0].list;
    auto it = std::find(list12.begin(), list12.end(), chat);
    REQUIRE(it != list12.end());
    size_t idx = static_cast<size_t>(it - list12.begin());
    REQUIRE(t12.steps.size() == 2);
    CHECK(t12.steps[1].branches[idx].parent == idx);
    CHECK(t12.steps[1].branches[idx].list.empty());
    // tuple (2,1): zero survives both stages
    const TupleTrace& t21 = res.traces[1];
    REQUIRE(t21.tuple == std::vector<size_t>{1, 0});
    const auto& list21 = t21.steps[0].branches[0].list;
    auto zit = std::find(list21.begin(), list21.end(), zero_block);
    REQUIRE(zit != list21.end());
    size_t zidx = static_cast<size_t>(zit - list21.begin());
    const auto& second = t21.steps[1].branches[zidx].list;
    CHECK(std::find(second.begin(), second.end(), zero_block) != second.end());
    CHECK(t21.accepted >= 1);
}

TEST_CASE("first-hit output is a subset of the full sweep") {
    CodeSpec cs = f8_scalar_spec();
    const Field& f = *cs.field;
    DecoderSpec dec = cs.decoder();
    for (uint64_t t = 0; t < 10; ++t) {
        auto rng = trial_rng(17, t);
        std::vector<uint32_t> msg(cs.dim());
        for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
        auto y = add_error(f, cs.encode(msg), random_error(rng, f, 14, 3));
        DecodeOptions fh;
        fh.first_hit = true;
        auto fast = dec.list_decode(y, fh);
        auto full = dec.list_decode(y);
        CHECK(!fast.words.empty());
        for (const auto& w : fast.words)
            CHECK(std::binary_search(full.words.begin(), full.words.end(), w));
    }
}

TEST_CASE("distance override narrows the accepted ball") {
    CodeSpec cs = f8_scalar_spec();
    DecoderSpec dec = cs.decoder();
    std::vector<uint32_t> msg = {1, 2, 3, 4};
    auto sent = cs.encode(msg);
    auto y = sent;
    y[0] = cs.field->add(y[0], 1);
    DecodeOptions opt;
    opt.tau_override = 0;
    CHECK(dec.list_decode(y, opt).words.empty());
    CHECK(dec.list_decode(sent, opt).words == std::vector<std::vector<uint32_t>>{sent});
}

TEST_CASE("half-distance decoding returns the sent word") {
    CodeSpec cs = f8_scalar_spec();
    const Field& f = *cs.field;
    DecoderSpec dec = cs.decoder();
    uint64_t dmin = cs.scalar->distance_nested_nsc();
    CHECK(dmin == 7);
    for (uint64_t t = 0; t < 15; ++t) {
        auto rng = trial_rng(23, t);
        std::vector<uint32_t> msg(cs.dim());
        for (auto& v : msg) v = static_cast<uint32_t>(uniform_below(rng, f.size()));
        auto sent = cs.encode(msg);
        uint64_t w = uniform_below(rng, (dmin - 1) / 2 + 1);
        auto y = add_error(f, sent, random_error(rng, f, 14, w));
        auto got = dec.unique_decode(y, dmin);
        REQUIRE(got.has_value());
        CHECK(*got == sent);
    }
}

TEST_CASE("received word length is checked") {
    CodeSpec cs = f8_scalar_spec();
    DecoderSpec dec = cs.decoder();
    std::vector<uint32_t> bad(13, 0);
    CHECK_THROWS_AS((void)dec.list_decode(bad), invariant_error);
}
