#pragma once

#include "brt/spectrum.hpp"

#include <cstdint>
#include <vector>

namespace brt {

constexpr double kPoissonTail = 1e-15;

double poisson_pmf(double rate, int k);
// P(X = 0..K) with the tail beyond K below kPoissonTail, K at least min_len - 1.
std::vector<double> poisson_law(double rate, std::size_t min_len = 0);

double tv_poisson(double r1, double r2);
// TV between two finite laws; missing entries count as zero mass.
double tv_discrete(const std::vector<double>& p, const std::vector<double>& q);
double hellinger_sq(const std::vector<double>& p, const std::vector<double>& q);
double hellinger_sq_poisson(double r1, double r2);
// 1 - exp(-(sqrt(1 + x) - 1)^2 / 2)
double poisson_lower_bound(double x);

BigInt stirling2(int p, int t);
// sum_t S(p, t) K_{lambda, (N - t, 1^t)}
BigInt multiplicity_mlp(const Partition& lambda, int p);

constexpr int kMaxMomentOrder = 4;
// E[Fix^p] after K shuffles, from the spectrum restricted to lambda_1 >= N - p.
double fix_moment_exact(int p, long long K, const ShuffleParams& params);
// Limiting Fix rate: 1 + e^c / 2 for b < 1, 1 + e^c for b = 1.
double fix_limit_rate(double c, const Rational& b);
// sum_t S(p, t) (1 + e^c / 2)^t
double fix_moment_limit(int p, double c);
// sum_t S(p, t) fix_limit_rate(c, b)^t
double fix_moment_limit(int p, double c, const Rational& b);

// TV between an empirical histogram and Poisson(rate).
double tv_histogram_poisson(const std::vector<std::uint64_t>& counts, double rate);

}  // namespace brt
