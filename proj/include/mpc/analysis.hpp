#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mpc/reed_solomon.hpp"

namespace mpc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(uint64_t n, uint64_t k);
/// "num/den" in lowest terms, or just "num" when the denominator is 1.
std::string rational_str(const Rational& r);

/// Probability that a uniform error pattern of weight exactly tau on a
/// length m*l word, split into l blocks, puts at most tau_j errors into the
/// j-th of a fixed ordered choice of s blocks, for j = 1..s-1: the remaining
/// weight falls anywhere in the other l-s+1 blocks (the last chosen block
/// carries no cap in this formula; see good_set_probability_exact).
Rational good_set_probability(uint64_t m, uint64_t l, uint64_t s, uint64_t tau,
                              std::span<const uint64_t> taus);

/// Independent oracle enforcing all s caps, including the last chosen block:
/// enumerates weight compositions (w_1..w_l) of tau and sums
/// prod binom(m, w_i) over those with w_j <= tau_j for j = 1..s.
Rational good_set_probability_exact(uint64_t m, uint64_t l, uint64_t s, uint64_t tau,
                                    std::span<const uint64_t> taus);

/// Weight distribution for random errors of weight <= tau: `proportional`
/// makes every pattern of weight <= tau equally likely (weight w drawn with
/// probability proportional to binom(n,w)(q-1)^w); `uniform` draws the
/// weight uniformly from 0..tau first.
enum class ErrorWeightModel { proportional, uniform };

struct ProbEstimate {
    double estimate = 0.0;
    uint64_t successes = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    double std_error = 0.0;
};

/// Monte Carlo estimate of the probability that list decoding at multiplicity
/// v returns more than one codeword, over random codewords hit by random
/// errors of weight <= tau^v. Deterministic per (seed, trials) for any thread
/// count: each trial's randomness derives from (seed, trial index).
ProbEstimate estimate_p_tau(const RSCode& code, uint64_t v, uint64_t trials, uint64_t seed,
                            ErrorWeightModel model = ErrorWeightModel::proportional,
                            unsigned threads = 1);

/// prod (1 - p_i): probability every constituent list has a single element.
double decoder_success_probability(std::span<const double> p_estimates);

/// min(1, l * p_tau1): union bound on some wrong block choice surviving.
double bad_tuple_survival_bound(uint64_t l, double p_tau1);

/// s! * binom(l,s) * (D_1 + sum_{i=2..s} (prod_{j<i} D_j) * R_i), the branch
/// budget over all index tuples; for s=1 this is l * D_1 (empty sum).
BigInt complexity_estimate(uint64_t l, uint64_t s, std::span<const uint64_t> list_caps,
                           std::span<const uint64_t> costs);

/// Unbiased uniform draw from 0..n-1 (rejection off the raw 64-bit stream,
/// so results are identical across platforms).
uint64_t uniform_below(std::mt19937_64& rng, uint64_t n);
/// Error vector of exact Hamming weight `weight`: uniform support, uniform
/// nonzero values.
std::vector<uint32_t> random_error(std::mt19937_64& rng, const Field& f, size_t n,
                                   uint64_t weight);

} // namespace mpc
