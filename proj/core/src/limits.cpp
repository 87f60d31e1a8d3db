#include "brt/limits.hpp"

#include <algorithm>
#include <cmath>

namespace brt {

double poisson_pmf(double rate, int k)
{
    if (rate <= 0)
        throw InvalidInput("Poisson rate must be positive");
    if (k < 0)
        return 0.0;
    return std::exp(-rate + k * std::log(rate) - std::lgamma(k + 1.0));
}

std::vector<double> poisson_law(double rate, std::size_t min_len)
{
    if (rate <= 0)
        throw InvalidInput("Poisson rate must be positive");
    std::vector<double> law;
    double cum = 0.0;
    for (int k = 0;; ++k) {
        double p = poisson_pmf(rate, k);
        law.push_back(p);
        cum += p;
        if (law.size() >= min_len && k > rate && 1.0 - cum < kPoissonTail)
            break;
        if (k > 100000)
            break;
    }
    return law;
}

double tv_discrete(const std::vector<double>& p, const std::vector<double>& q)
{
    std::size_t len = std::max(p.size(), q.size());
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k) {
        double x = k < p.size() ? p[k] : 0.0;
        double y = k < q.size() ? q[k] : 0.0;
        s += std::abs(x - y);
    }
    return 0.5 * s;
}

double tv_poisson(double r1, double r2)
{
    std::vector<double> p = poisson_law(r1);
    std::vector<double> q = poisson_law(r2, p.size());
    p = poisson_law(r1, q.size());
    return tv_discrete(p, q);
}

double hellinger_sq(const std::vector<double>& p, const std::vector<double>& q)
{
    std::size_t len = std::min(p.size(), q.size());
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k)
        s += std::sqrt(p[k] * q[k]);
    return 1.0 - s;
}

double hellinger_sq_poisson(double r1, double r2)
{
    std::vector<double> p = poisson_law(r1);
    std::vector<double> q = poisson_law(r2, p.size());
    p = poisson_law(r1, q.size());
    return hellinger_sq(p, q);
}

double poisson_lower_bound(double x)
{
    if (x < 0)
        throw InvalidInput("poisson_lower_bound needs x >= 0");
    double d = std::sqrt(1.0 + x) - 1.0;
    return 1.0 - std::exp(-0.5 * d * d);
}

BigInt stirling2(int p, int t)
{
    if (p < 0 || t < 0)
        throw InvalidInput("stirling2: negative argument");
    if (t > p)
        return 0;
    std::vector<BigInt> row(t + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= p; ++m) {
        for (int k = std::min(m, t); k >= 1; --k)
            row[k] = k * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[t];
}

BigInt multiplicity_mlp(const Partition& lambda, int p)
{
    if (p < 0)
        throw InvalidInput("multiplicity_mlp: negative p");
    int N = lambda.size();
    if (lambda.first() < N - p)
        return 0;
    BigInt m = 0;
    for (int t = 0; t <= std::min(p, N); ++t) {
        BigInt s = stirling2(p, t);
        if (s == 0)
            continue;
        std::vector<int> content;
        if (N - t > 0)
            content.push_back(N - t);
        content.insert(content.end(), t, 1);
        m += s * count_ssyt(lambda, content);
    }
    return m;
}

double fix_moment_exact(int p, long long K, const ShuffleParams& params)
{
    if (p < 0 || p > kMaxMomentOrder)
        throw InvalidInput("fix_moment_exact supports 0 <= p <= 4");
    if (K < 0)
        throw InvalidInput("fix_moment_exact: negative K");
    if (!params.stochastic())
        throw InvalidInput("fix_moment_exact needs a stochastic split");
    int N = params.N();
    long double total = 0.0L;
    // lambda = (N - j, T) with T |- j and T_1 <= N - j
    for (int j = 0; j <= std::min(p, N - 1); ++j) {
        for (const Partition& tail : enumerate_partitions(j)) {
            if (tail.first() > N - j)
                continue;
            std::vector<int> parts{N - j};
            parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
            Partition lambda(parts);
            BigInt m = multiplicity_mlp(lambda, p);
            if (m == 0)
                continue;
            long double lm = static_cast<long double>(log_big(m));
            for (const LRTerm& term : lr_support(lambda, params.nA(), params.nB())) {
                Rational e = eigenvalue(params, lambda, term.mu, term.nu);
                long double w = lm + static_cast<long double>(log_big(term.c * count_syt(term.mu) * count_syt(term.nu)));
                if (K == 0) {
                    total += std::exp(w);
                    continue;
                }
                if (e == 0)
                    continue;
                long double ed = static_cast<long double>(to_double(e));
                long double mag = std::exp(w + static_cast<long double>(K) * std::log(std::fabs(ed)));
                total += (ed < 0 && K % 2 == 1) ? -mag : mag;
            }
        }
    }
    return static_cast<double>(total);
}

double fix_limit_rate(double c, const Rational& b)
{
    return b == 1 ? 1.0 + std::exp(c) : 1.0 + std::exp(c) / 2.0;
}

double fix_moment_limit(int p, double c)
{
    return fix_moment_limit(p, c, Rational(1, 2));
}

double fix_moment_limit(int p, double c, const Rational& b)
{
    if (p < 0)
        throw InvalidInput("fix_moment_limit: negative p");
    double r = fix_limit_rate(c, b);
    double s = 0.0;
    for (int t = 0; t <= p; ++t)
        s += to_double(stirling2(p, t)) * std::pow(r, t);
    return s;
}

double tv_histogram_poisson(const std::vector<std::uint64_t>& counts, double rate)
{
    std::uint64_t n = 0;
    for (auto c : counts)
        n += c;
    if (n == 0)
        throw InvalidInput("empty histogram");
    std::vector<double> emp(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k)
        emp[k] = static_cast<double>(counts[k]) / static_cast<double>(n);
    return tv_discrete(emp, poisson_law(rate));
}

}  // namespace brt
