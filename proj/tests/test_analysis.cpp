#include "doctest.h"

#include <set>

#include "mpc/analysis.hpp"

using namespace mpc;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 5) == 0);
    CHECK(binomial(30, 15) == BigInt("155117520"));
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("rational formatting") {
    CHECK(rational_str(Rational(1, 2)) == "1/2");
    CHECK(rational_str(Rational(4, 2)) == "2");
    CHECK(rational_str(Rational(0)) == "0");
}

TEST_CASE("good-tuple probability is one half in the two-block worked case") {
    const uint64_t taus[] = {3};
    Rational p = good_set_probability(15, 2, 2, 7, taus);
    CHECK(rational_str(p) == "1/2");
    const uint64_t both[] = {3, 7};
    CHECK(good_set_probability_exact(15, 2, 2, 7, both) == p);
}

TEST_CASE("two-block complement identity") {
    // first block carrying <= t errors is the complement of it carrying
    // >= t+1, i.e. of the second block carrying <= tau-t-1
    for (uint64_t tau = 1; tau <= 9; ++tau)
        for (uint64_t t = 0; t + 1 <= tau; ++t) {
            const uint64_t a[] = {t}, b[] = {tau - t - 1};
            Rational sum =
                good_set_probability(15, 2, 2, tau, a) + good_set_probability(15, 2, 2, tau, b);
            CHECK(sum == 1);
        }
}

TEST_CASE("the exact oracle matches the formula when the last cap is slack") {
    const uint64_t formula_taus[] = {3};
    const uint64_t slack[] = {3, 7};
    const uint64_t tight[] = {3, 2};
    Rational formula = good_set_probability(15, 3, 2, 7, formula_taus);
    CHECK(good_set_probability_exact(15, 3, 2, 7, slack) == formula);
    // a binding cap on the last chosen block lowers the probability
    CHECK(good_set_probability_exact(15, 3, 2, 7, tight) < formula);
}

TEST_CASE("probabilities stay within [0,1] and degenerate cases are exact") {
    const uint64_t taus[] = {7};
    CHECK(good_set_probability(15, 2, 1, 7, {}) == 1);  // no caps at all
    CHECK(good_set_probability(15, 2, 2, 7, taus) == 1);  // cap equals the weight
    const uint64_t zero[] = {0};
    Rational p = good_set_probability(15, 2, 2, 7, zero);
    CHECK(p > 0);
    CHECK(p < 1);
}

TEST_CASE("branch budget") {
    const uint64_t caps[] = {5, 9};
    const uint64_t one[] = {1, 1};
    // 2 ordered tuples, each D_1 branches plus D_1 second-stage decodes
    CHECK(complexity_estimate(2, 2, caps, one) == 20);
    const uint64_t costs[] = {100, 200};
    CHECK(complexity_estimate(2, 2, caps, costs) == 2 * (5 + 5 * 200));
    const uint64_t c1[] = {4};
    const uint64_t r1[] = {70};
    // s = 1: l tuples of D_1 branches, the cost entry is unused
    CHECK(complexity_estimate(2, 1, c1, r1) == 8);
    const uint64_t unit_cap[] = {1};
    CHECK(complexity_estimate(2, 1, unit_cap, r1) == 2);
    CHECK_THROWS_AS((void)complexity_estimate(1, 2, caps, one), invariant_error);
}

TEST_CASE("success probability and survival bounds") {
    const double ps[] = {0.1, 0.2};
    CHECK(decoder_success_probability(ps) == doctest::Approx(0.72));
    CHECK(bad_tuple_survival_bound(2, 0.3) == doctest::Approx(0.6));
    CHECK(bad_tuple_survival_bound(10, 0.5) == 1.0);
    const double bad[] = {1.5};
    CHECK_THROWS_AS((void)decoder_success_probability(bad), invariant_error);
}

TEST_CASE("uniform sampling is deterministic and in range") {
    auto r1 = trial_rng(42, 0);
    auto r2 = trial_rng(42, 0);
    std::vector<uint64_t> counts(6, 0);
    for (int i = 0; i < 6000; ++i) {
        uint64_t a = uniform_below(r1, 6);
        CHECK(a == uniform_below(r2, 6));
        CHECK(a < 6);
        ++counts[a];
    }
    for (uint64_t c : counts) {
        CHECK(c > 800);
        CHECK(c < 1200);
    }
}

TEST_CASE("random errors have exact weight, distinct support, nonzero values") {
    Field f(2, 4);
    auto rng = trial_rng(5, 3);
    for (int i = 0; i < 50; ++i) {
        auto e = random_error(rng, f, 30, 7);
        CHECK(e.size() == 30);
        CHECK(hamming_weight(e) == 7);
        std::set<size_t> support;
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j]) support.insert(j);
        CHECK(support.size() == 7);
    }
    auto z = random_error(rng, f, 30, 0);
    CHECK(hamming_weight(z) == 0);
}

TEST_CASE("list-overflow estimates are deterministic across thread counts") {
    Field f(2, 4);
    RSCode rs(f, 10);
    ProbEstimate a = estimate_p_tau(rs, 4, 60, 9, ErrorWeightModel::proportional, 1);
    ProbEstimate b = estimate_p_tau(rs, 4, 60, 9, ErrorWeightModel::proportional, 3);
    CHECK(a.successes == b.successes);
    CHECK(a.estimate == b.estimate);
    CHECK(a.trials == 60);
    CHECK(a.seed == 9);
    CHECK(a.estimate >= 0.0);
    CHECK(a.estimate <= 1.0);
    ProbEstimate u = estimate_p_tau(rs, 4, 40, 9, ErrorWeightModel::uniform, 2);
    CHECK(u.trials == 40);
    // the radius-1 list of a [15,13] code holds at most one word
    ProbEstimate cap1 = estimate_p_tau(RSCode(f, 13), 1, 50, 1);
    CHECK(cap1.successes == 0);
}
