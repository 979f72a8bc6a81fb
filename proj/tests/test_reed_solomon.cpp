#include "doctest.h"

#include <algorithm>

#include "mpc/analysis.hpp"
#include "mpc/reed_solomon.hpp"

using namespace mpc;

TEST_CASE("list decoding parameter table") {
    struct Row {
        uint64_t m, k, v, r, l, tau, cap;
    };
    const Row rows[] = {
        {15, 10, 4, 6, 47, 3, 5}, {15, 4, 4, 10, 28, 7, 9}, {15, 8, 2, 4, 21, 4, 3},
        {15, 5, 1, 3, 9, 5, 2},   {15, 5, 8, 16, 63, 7, 15}, {15, 13, 1, 2, 13, 1, 1},
        {15, 8, 1, 2, 11, 3, 1},  {7, 3, 1, 3, 4, 2, 2},
    };
    for (const Row& row : rows) {
        GSParams p = gs_params(row.m, row.k, row.v);
        CHECK(p.r == row.r);
        CHECK(p.l == row.l);
        CHECK(p.tau == row.tau);
        CHECK(p.list_cap == row.cap);
    }
    CHECK_THROWS_AS((void)gs_params(15, 1, 1), invariant_error);
    CHECK_THROWS_AS((void)gs_params(15, 15, 1), invariant_error);
    CHECK_THROWS_AS((void)gs_params(15, 5, 0), invariant_error);
}

TEST_CASE("narrow-sense RS codewords vanish on the root window") {
    Field f(2, 4);
    RSCode rs(f, 10);
    CHECK(rs.length() == 15);
    CHECK(rs.min_distance() == 6);
    std::vector<uint32_t> msg = {1, f.alpha(), 0, f.alpha_pow(7), 0, 0, 1, 0, 0, f.alpha_pow(3)};
    auto cw = rs.encode(msg);
    CHECK(rs.contains(cw));
    Poly cp(f, std::vector<uint32_t>(cw.begin(), cw.end()));
    for (size_t j = 1; j <= 5; ++j) CHECK(cp.eval(f.alpha_pow(j)) == 0);
    // narrow-sense: coefficient view equals the evaluation view
    Poly g(f, std::vector<uint32_t>(msg.begin(), msg.end()));
    for (size_t i = 0; i < 15; ++i) CHECK(cw[i] == g.eval(f.alpha_pow(i)));
}

TEST_CASE("window start 2 shifts the roots and scales the evaluations") {
    Field f(2, 4);
    RSCode rs(f, 8, 2);
    std::vector<uint32_t> msg(8, 0);
    msg[3] = f.alpha_pow(6);
    msg[0] = 1;
    auto cw = rs.encode(msg);
    CHECK(rs.contains(cw));
    Poly cp(f, std::vector<uint32_t>(cw.begin(), cw.end()));
    for (size_t j = 2; j <= 8; ++j) CHECK(cp.eval(f.alpha_pow(j)) == 0);
    CHECK(cp.eval(f.alpha()) != 0);
    // coefficient view = evaluation view scaled by alpha^(-(w-1)i)
    Poly g(f, std::vector<uint32_t>(msg.begin(), msg.end()));
    for (size_t i = 0; i < 15; ++i)
        CHECK(cw[i] == f.mul(g.eval(f.alpha_pow(i)), f.alpha_pow(-static_cast<int64_t>(i))));
}

TEST_CASE("generator polynomial divides x^m - 1 and spans the code") {
    Field f(2, 4);
    RSCode rs(f, 10);
    Poly gen = rs.generator_poly();
    CHECK(gen.degree() == 5);
    CHECK(Poly::x_pow_minus_one(f, 15).divmod(gen).second.is_zero());
    LinearCode lc = rs.to_linear_code();
    CHECK(lc.dim() == 10);
    CHECK(lc.known_distance() == 6);
    LinearCode cyc = LinearCode::cyclic_code(f, gen, 15);
    CHECK(LinearCode::is_subcode(cyc, lc));
    CHECK(LinearCode::is_subcode(lc, cyc));
}

TEST_CASE("list decoding a corrupted [15,10] word recovers the fixed codeword") {
    Field f(2, 4);
    RSCode rs(f, 10);
    auto block = [&](const char* text) {
        std::vector<uint32_t> out = Poly::parse(f, text).coeffs();
        out.resize(15, 0);
        return out;
    };
    auto p1 = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^13");
    auto chat = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^7 + a^10*x^13 + a^5*x^14");
    CHECK(rs.contains(chat));
    auto words = gs_list_decode(rs, p1, 4);
    CHECK(std::binary_search(words.begin(), words.end(), chat));
    CHECK(hamming_distance(chat, p1) == 3);
    for (const auto& w : words) {
        CHECK(rs.contains(w));
        CHECK(hamming_distance(w, p1) <= 3);
    }
}

TEST_CASE("the [15,4] stage sees no codeword near the residual block") {
    Field f(2, 4);
    RSCode rs4(f, 4);
    auto block = [&](const char* text) {
        std::vector<uint32_t> out = Poly::parse(f, text).coeffs();
        out.resize(15, 0);
        return out;
    };
    auto p1 = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^13");
    auto p2 = block("a^5*x^2 + a^7*x^6 + a^8*x^10");
    auto chat = block("a^2*x + a*x^5 + a^5*x^6 + a^14*x^7 + a^10*x^13 + a^5*x^14");
    std::vector<uint32_t> resid(15);
    for (size_t i = 0; i < 15; ++i) resid[i] = f.sub(p2[i], chat[i]);
    CHECK(gs_params(15, 4, 4).tau == 7);
    CHECK(gs_list_decode(rs4, resid, 4).empty());
    CHECK(rs4.to_linear_code().list_decode_bruteforce(resid, 7).empty());
    // p1 itself is within radius of only the zero word
    auto around_p1 = gs_list_decode(rs4, p1, 4);
    REQUIRE(around_p1.size() == 1);
    CHECK(hamming_weight(around_p1[0]) == 0);
    CHECK(hamming_weight(p1) == 4);
}

TEST_CASE("list decoding matches the exhaustive ball on a small code") {
    Field f(2, 3);
    RSCode rs(f, 3);
    LinearCode lc = rs.to_linear_code();
    uint64_t tau = gs_params(7, 3, 1).tau;
    CHECK(tau == 2);
    for (uint64_t t = 0; t < 40; ++t) {
        auto rng = trial_rng(99, t);
        std::vector<uint32_t> y(7);
        for (auto& v : y) v = static_cast<uint32_t>(uniform_below(rng, 8));
        CHECK(gs_list_decode(rs, y, 1) == lc.list_decode_bruteforce(y, tau));
    }
}

TEST_CASE("consecutive root windows") {
    Field f(2, 4);
    CHECK(consecutive_root_window(f, RSCode(f, 10).generator_poly()) == 1);
    CHECK(consecutive_root_window(f, RSCode(f, 8, 2).generator_poly()) == 2);
    // wrap-around run alpha^14, alpha^0
    Poly wrap = Poly::parse(f, "x + a^14") * Poly::parse(f, "x + 1");
    CHECK(consecutive_root_window(f, wrap) == 14);
    // roots alpha, alpha^3 are not consecutive
    Poly gap = Poly::parse(f, "x + a") * Poly::parse(f, "x + a^3");
    CHECK(!consecutive_root_window(f, gap).has_value());
    // repeated root
    Poly rep = Poly::parse(f, "x + a") * Poly::parse(f, "x + a");
    CHECK(!consecutive_root_window(f, rep).has_value());
}

TEST_CASE("RS structure detection") {
    Field f(2, 4);
    // cyclic generator with a recorded window
    LinearCode c1 = LinearCode::cyclic_code(f, RSCode(f, 8).generator_poly(), 15);
    auto r1 = detect_rs_structure(f, c1);
    REQUIRE(r1.has_value());
    CHECK(r1->dim() == 8);
    CHECK(r1->window_start() == 1);
    // plain generator matrix, found by the window scan
    LinearCode c2 = LinearCode::from_generator(f, RSCode(f, 10, 3).to_linear_code().generator());
    auto r2 = detect_rs_structure(f, c2);
    REQUIRE(r2.has_value());
    CHECK(r2->dim() == 10);
    CHECK(r2->window_start() == 3);
    // cyclic but not RS: roots alpha, alpha^3
    Poly gap = Poly::parse(f, "x + a") * Poly::parse(f, "x + a^3");
    CHECK(!detect_rs_structure(f, LinearCode::cyclic_code(f, gap, 15)).has_value());
    // wrong length
    Field f8(2, 3);
    LinearCode c3 = LinearCode::cyclic_code(f8, Poly::parse(f8, "x + 1"), 14);
    CHECK(!detect_rs_structure(f8, c3).has_value());
}
