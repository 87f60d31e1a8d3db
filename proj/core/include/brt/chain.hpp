#pragma once

#include "brt/spectrum.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace brt {

// perm[i] is the image of i (0-based).
using Perm = std::vector<int>;

std::uint64_t lehmer_rank(const Perm& perm);
Perm lehmer_unrank(std::uint64_t rank, int n);
// (left o right)(i) = left(right(i))
Perm compose(const Perm& left, const Perm& right);
Perm identity_perm(int n);
Perm transposition(int n, int i, int j);

struct StepMeasure {
    int n_cards = 0;
    Rational id_mass;
    // Unordered pairs (i < j), 0-based labels.
    std::map<std::pair<int, int>, Rational> weights;
};

StepMeasure step_measure(const ShuffleParams& p);

struct GroupDistribution {
    int n_cards = 0;
    std::vector<double> probs;

    static GroupDistribution point_mass(int n, const Perm& at);
    static GroupDistribution uniform(int n);
};

struct ExactDistribution {
    int n_cards = 0;
    std::vector<Rational> probs;

    static ExactDistribution point_mass(int n, const Perm& at);
};

constexpr int kEvolveMaxN = 9;
constexpr int kExactMaxN = 6;
constexpr int kOracleMaxN = 6;

// new[x] = id_mass * old[x] + sum_tau w(tau) * old[tau o x]
GroupDistribution evolve(const GroupDistribution& dist, const StepMeasure& m, int t);
ExactDistribution evolve_exact(const ExactDistribution& dist, const StepMeasure& m, int t);

double tv_to_uniform(const GroupDistribution& dist);
Rational tv_to_uniform(const ExactDistribution& dist);

// Exact walk from the identity over many steps. Keeps integer numerators over
// a common denominator D^t, so long horizons stay cheap.
class ExactWalk {
public:
    explicit ExactWalk(const StepMeasure& m);

    void step();
    int time() const { return time_; }
    Rational prob(std::size_t rank) const;
    std::vector<Rational> distribution() const;
    double tv_to_uniform() const;
    // Exact law of stat(perm), stat values in [0, bins).
    std::vector<Rational> pushforward(const std::function<int(const Perm&)>& stat, int bins) const;

private:
    int n_;
    std::size_t states_;
    BigInt scale_;        // D
    BigInt denominator_;  // D^t
    BigInt id_weight_;
    std::vector<std::pair<BigInt, std::vector<std::uint32_t>>> moves_;
    std::vector<BigInt> num_;
    int time_ = 0;
};

// Rank table: table[x] = rank(tau o unrank(x)).
std::vector<std::uint32_t> left_action_table(int n, int i, int j);

// Draws card labels from the biased measure. Requires a stochastic split.
class BiasedCardSampler {
public:
    explicit BiasedCardSampler(const ShuffleParams& p);
    int operator()(std::mt19937_64& rng) const;

private:
    int nA_, nB_;
    std::uint64_t range_, cut_;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);
// Uniform integer in [0, bound), rejection sampling so results do not depend
// on the standard library's distribution implementation.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

Perm sample_walk(const ShuffleParams& p, long long t, std::uint64_t seed);
int count_fixed_points(const Perm& perm);

// Histogram of Fix after t steps. Samples are split into fixed blocks with
// derived seeds, so the result does not depend on the thread count.
std::vector<std::uint64_t> fixed_point_histogram(const ShuffleParams& p, long long t, std::uint64_t samples,
                                                 std::uint64_t seed, unsigned threads = 0);
// Empirical distribution over S_N after t steps.
GroupDistribution empirical_distribution(const ShuffleParams& p, long long t, std::uint64_t samples,
                                         std::uint64_t seed, unsigned threads = 0);

// Eigenvalues of the explicit N! x N! matrix, sorted descending.
std::vector<double> numeric_spectrum_oracle(const ShuffleParams& p);

}  // namespace brt
