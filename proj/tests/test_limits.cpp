#include "doctest.h"
#include "oracles.hpp"

#include "brt/bounds.hpp"
#include "brt/chain.hpp"
#include "brt/limits.hpp"

#include <cmath>
#include <numbers>

using namespace brt;

TEST_CASE("Poisson distances")
{
    CHECK(tv_poisson(1.3, 1.3) == doctest::Approx(0.0));
    double tv = tv_poisson(1.0, 3.0);
    CHECK(tv > 0);
    CHECK(tv < 1);
    for (auto [r1, r2] : std::vector<std::pair<double, double>>{{1, 3}, {1, 1.5}, {2, 2.1}, {0.5, 7}})
        CHECK(tv_poisson(r1, r2) >= hellinger_sq_poisson(r1, r2));
    double s = 0;
    for (double p : poisson_law(2.5))
        s += p;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Hellinger closed form")
{
    CHECK(poisson_lower_bound(0.0) == 0.0);
    for (double x : {0.5, 1.0, std::numbers::e})
        CHECK(std::abs(hellinger_sq_poisson(1.0, 1.0 + x) - poisson_lower_bound(x)) <= 1e-10);
    double c = 1.0;
    double want = 1 - std::exp(-0.5 * std::pow(std::sqrt(1 + 0.5 * std::exp(c)) - 1, 2));
    CHECK(poisson_lower_bound(0.5 * std::exp(c)) == doctest::Approx(want));
    CHECK(hellinger_sq({0.5, 0.5}, {0.5, 0.5}) == doctest::Approx(0.0));
    CHECK(hellinger_sq({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
}

TEST_CASE("Stirling numbers")
{
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 5) == 0);
    for (int p = 1; p <= 9; ++p) {
        CHECK(stirling2(p, p) == 1);
        CHECK(stirling2(p, 1) == 1);
        CHECK(stirling2(p, 0) == 0);
        for (int t = 0; t <= p; ++t)
            CHECK(stirling2(p, t) == oracle::set_partitions(p, t));
        // x^p = sum_t S(p, t) x (x-1) ... (x-t+1)
        for (long long x = 0; x <= 7; ++x) {
            BigInt lhs = 1, rhs = 0;
            for (int k = 0; k < p; ++k)
                lhs *= x;
            for (int t = 0; t <= p; ++t) {
                BigInt fall = 1;
                for (int k = 0; k < t; ++k)
                    fall *= x - k;
                rhs += stirling2(p, t) * fall;
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("tensor-power multiplicities")
{
    CHECK(multiplicity_mlp(Partition::row(7), 1) == 1);
    CHECK(multiplicity_mlp(Partition{3, 2, 1, 1}, 2) == 0);
    for (int n = 1; n <= 6; ++n) {
        for (int p = 0; p <= 3; ++p) {
            BigInt dim = 0;
            for (const auto& la : enumerate_partitions(n)) {
                BigInt m = multiplicity_mlp(la, p);
                if (la.first() < n - p)
                    CHECK(m == 0);
                dim += m * count_syt(la);
            }
            BigInt want = 1;
            for (int k = 0; k < p; ++k)
                want *= n;
            CHECK(dim == want);
        }
    }
}

TEST_CASE("limit moments")
{
    CHECK(fix_moment_limit(0, 0.3) == doctest::Approx(1.0));
    CHECK(fix_moment_limit(1, 0.7) == doctest::Approx(1 + std::exp(0.7) / 2));
    CHECK(fix_moment_limit(2, 0.0) == doctest::Approx(3.75));
}

TEST_CASE("exact moments against the full state space")
{
    for (const Rational& b : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        ShuffleParams p = ShuffleParams::balanced(3, b);
        CHECK(fix_moment_exact(1, 0, p) == doctest::Approx(6.0));
        ExactWalk walk(step_measure(p));
        for (int K = 0; K <= 12; ++K) {
            auto law = walk.pushforward([](const Perm& x) { return count_fixed_points(x); }, 7);
            for (int pw = 0; pw <= 4; ++pw) {
                double want = 0;
                for (int k = 0; k <= 6; ++k)
                    want += std::pow(k, pw) * to_double(law[k]);
                CHECK(fix_moment_exact(pw, K, p) == doctest::Approx(want).epsilon(1e-12));
            }
            walk.step();
        }
    }
    CHECK_THROWS_AS(fix_moment_exact(5, 1, ShuffleParams::balanced(3, Rational(1))), InvalidInput);
}

TEST_CASE("first moment against a single-position chain")
{
    for (const Rational& b : {Rational(1, 2), Rational(1, 4)}) {
        for (int n : {5, 20, 50}) {
            ShuffleParams p = ShuffleParams::balanced(n, b);
            for (long long K : {1LL, 10LL, 100LL, window_steps(2 * n, b, 0.0)}) {
                CHECK(fix_moment_exact(1, K, p) == doctest::Approx(oracle::mean_fixed_points_single_card(p, K)).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("exact moments against Monte Carlo")
{
    ShuffleParams p = ShuffleParams::balanced(3, Rational(1, 2));
    const std::uint64_t samples = 1000000;
    auto hist = fixed_point_histogram(p, 10, samples, 31337);
    for (int pw : {1, 2}) {
        double m1 = 0, m2 = 0;
        for (std::size_t k = 0; k < hist.size(); ++k) {
            double v = std::pow(static_cast<double>(k), pw);
            m1 += v * hist[k];
            m2 += v * v * hist[k];
        }
        m1 /= samples;
        m2 /= samples;
        double se = std::sqrt((m2 - m1 * m1) / samples);
        CHECK(std::abs(m1 - fix_moment_exact(pw, 10, p)) <= 3 * se);
    }
}

TEST_CASE("exact moments approach the Poisson limit")
{
    for (const Rational& b : {Rational(1, 4), Rational(1, 2)}) {
        for (double c : {0.0, 1.0}) {
            for (int pw = 1; pw <= 3; ++pw) {
                double limit = fix_moment_limit(pw, c);
                double prev = 1e300;
                for (int N : {100, 200, 400}) {
                    ShuffleParams p = ShuffleParams::balanced(N / 2, b);
                    double gap = std::abs(fix_moment_exact(pw, window_steps(N, b, c), p) - limit);
                    INFO("b=" << to_string(b) << " c=" << c << " p=" << pw << " N=" << N << " gap=" << gap);
                    CHECK(gap < prev);
                    prev = gap;
                }
            }
        }
    }
}

TEST_CASE("moment gaps shrink overall for b = 3/4")
{
    // not monotone in N here
    Rational b(3, 4);
    for (double c : {0.0, 1.0}) {
        for (int pw = 1; pw <= 3; ++pw) {
            double limit = fix_moment_limit(pw, c);
            auto gap = [&](int N) {
                return std::abs(fix_moment_exact(pw, window_steps(N, b, c), ShuffleParams::balanced(N / 2, b)) - limit);
            };
            CHECK(gap(800) < gap(100));
        }
    }
}

TEST_CASE("fixed-point law lower-bounds TV on six cards")
{
    for (const Rational& b : {Rational(1), Rational(1, 2)}) {
        ShuffleParams p = ShuffleParams::balanced(3, b);
        std::vector<double> uniform_law(7, 0.0);
        for (const auto& perm : oracle::all_perms(6))
            uniform_law[count_fixed_points(perm)] += 1.0 / 720;
        ExactWalk walk(step_measure(p));
        for (int t = 0; t <= 100; ++t) {
            auto law = walk.pushforward([](const Perm& x) { return count_fixed_points(x); }, 7);
            std::vector<double> ld(7);
            for (int k = 0; k < 7; ++k)
                ld[k] = to_double(law[k]);
            CHECK(walk.tv_to_uniform() >= tv_discrete(ld, uniform_law) - 1e-12);
            walk.step();
        }
    }
}

TEST_CASE("unbiased deck has rate 1 + e^c")
{
    CHECK(fix_limit_rate(0.0, Rational(1)) == doctest::Approx(2.0));
    CHECK(fix_limit_rate(0.0, Rational(1, 2)) == doctest::Approx(1.5));
    Rational b(1);
    for (double c : {0.0, 1.0}) {
        for (int pw = 1; pw <= 3; ++pw) {
            double limit = fix_moment_limit(pw, c, b);
            double prev = 1e300;
            for (int N : {100, 200, 400}) {
                double gap = std::abs(fix_moment_exact(pw, window_steps(N, b, c), ShuffleParams::balanced(N / 2, b)) - limit);
                CHECK(gap < prev);
                prev = gap;
            }
        }
    }
}
