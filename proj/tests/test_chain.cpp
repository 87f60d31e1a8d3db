#include "doctest.h"
#include "oracles.hpp"

#include "brt/chain.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace brt;

TEST_CASE("Lehmer ranks")
{
    for (int n = 0; n <= 6; ++n) {
        auto perms = oracle::all_perms(n);
        for (std::size_t k = 0; k < perms.size(); ++k) {
            // lexicographic order and Lehmer order coincide
            CHECK(lehmer_rank(perms[k]) == k);
            CHECK(lehmer_unrank(k, n) == perms[k]);
        }
    }
    CHECK(lehmer_rank(identity_perm(5)) == 0);
}

TEST_CASE("step measure")
{
    StepMeasure m = step_measure(ShuffleParams(2, 2, Rational(1)));
    CHECK(m.id_mass == Rational(1, 4));
    CHECK(m.weights.size() == 6);
    for (const auto& [pair, w] : m.weights)
        CHECK(w == Rational(1, 8));

    ShuffleParams p(1, 1, Rational(1, 3));
    Rational a = p.a(), b = p.b();
    StepMeasure m2 = step_measure(p);
    CHECK(m2.id_mass == (a * a + b * b) / 4);
    CHECK(m2.weights.at({0, 1}) == 2 * a * b / 4);

    for (const Rational& bb : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        for (int n = 1; n <= 4; ++n) {
            ShuffleParams q = ShuffleParams::balanced(n, bb);
            StepMeasure s = step_measure(q);
            Rational total = s.id_mass;
            Rational aa = q.a();
            for (const auto& [pair, w] : s.weights) {
                total += w;
                bool ia = pair.first < n, ja = pair.second < n;
                Rational want = ia && ja ? 2 * aa * aa : (!ia && !ja ? 2 * bb * bb : 2 * aa * bb);
                CHECK(w == want / (4 * n * n));
            }
            CHECK(total == 1);
        }
    }
}

TEST_CASE("explicit matrix is symmetric and doubly stochastic")
{
    for (const Rational& b : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        for (int n : {1, 2}) {
            ShuffleParams p = ShuffleParams::balanced(n, b);
            auto m = oracle::transition_matrix(p);
            for (std::size_t x = 0; x < m.size(); ++x) {
                Rational row = 0, col = 0;
                for (std::size_t y = 0; y < m.size(); ++y) {
                    row += m[x][y];
                    col += m[y][x];
                    CHECK(m[x][y] == m[y][x]);
                }
                CHECK(row == 1);
                CHECK(col == 1);
            }
        }
    }
}

TEST_CASE("exact evolution equals explicit matrix powers")
{
    for (const Rational& b : {Rational(1), Rational(1, 2)}) {
        for (int n : {1, 2}) {
            ShuffleParams p = ShuffleParams::balanced(n, b);
            auto m = oracle::transition_matrix(p);
            StepMeasure s = step_measure(p);
            ExactDistribution d = ExactDistribution::point_mass(2 * n, identity_perm(2 * n));
            std::vector<Rational> v = d.probs;
            ExactWalk walk(s);
            for (int t = 1; t <= 20; ++t) {
                v = oracle::mat_vec_left(m, v);
                d = evolve_exact(d, s, 1);
                walk.step();
                CHECK(d.probs == v);
                CHECK(walk.distribution() == v);
            }
            CHECK(evolve_exact(ExactDistribution::point_mass(2 * n, identity_perm(2 * n)), s, 20).probs == v);
        }
    }
}

TEST_CASE("floating evolution")
{
    ShuffleParams p = ShuffleParams::balanced(2, Rational(1, 2));
    StepMeasure s = step_measure(p);
    GroupDistribution start = GroupDistribution::point_mass(4, identity_perm(4));
    CHECK(evolve(start, s, 0).probs == start.probs);
    GroupDistribution one = evolve(start, s, 1);
    CHECK(one.probs[0] == doctest::Approx(to_double(s.id_mass)).epsilon(1e-15));
    for (const auto& [pair, w] : s.weights)
        CHECK(one.probs[lehmer_rank(transposition(4, pair.first, pair.second))]
              == doctest::Approx(to_double(w)).epsilon(1e-15));
    CHECK(tv_to_uniform(evolve(start, s, 200)) < 1e-9);
    CHECK(tv_to_uniform(GroupDistribution::uniform(4)) == doctest::Approx(0.0));
    CHECK(tv_to_uniform(start) == doctest::Approx(1.0 - 1.0 / 24));

    ExactWalk walk(s);
    GroupDistribution d = start;
    for (int t = 1; t <= 30; ++t) {
        walk.step();
        d = evolve(d, s, 1);
        CHECK(walk.tv_to_uniform() == doctest::Approx(tv_to_uniform(d)).epsilon(1e-9));
    }
    CHECK(to_double(tv_to_uniform(ExactDistribution::point_mass(3, identity_perm(3)))) == doctest::Approx(5.0 / 6));
}

TEST_CASE("size guards")
{
    GroupDistribution big;
    big.n_cards = 10;
    StepMeasure m;
    m.n_cards = 10;
    CHECK_THROWS_AS(evolve(big, m, 1), ResourceLimit);
    CHECK_THROWS_AS(numeric_spectrum_oracle(ShuffleParams::balanced(4, Rational(1))), ResourceLimit);
    StepMeasure m7 = step_measure(ShuffleParams(3, 4, Rational(1)));
    CHECK_THROWS_AS(ExactWalk{m7}, ResourceLimit);
}

TEST_CASE("sampler rejects non-stochastic splits")
{
    CHECK_THROWS_AS(sample_walk(ShuffleParams(1, 3, Rational(1, 2)), 1, 1), InvalidInput);
    CHECK_NOTHROW(sample_walk(ShuffleParams(1, 3, Rational(1)), 1, 1));
}

TEST_CASE("sampling one step reproduces the step measure")
{
    ShuffleParams p = ShuffleParams::balanced(2, Rational(1, 2));
    CHECK(sample_walk(p, 0, 99) == identity_perm(4));
    const std::uint64_t samples = 1000000;
    GroupDistribution emp = empirical_distribution(p, 1, samples, 2024);
    StepMeasure s = step_measure(p);
    auto within = [&](double observed, double prob) {
        double sigma = std::sqrt(prob * (1 - prob) / samples);
        return std::abs(observed - prob) <= 3 * sigma;
    };
    CHECK(within(emp.probs[0], to_double(s.id_mass)));
    for (const auto& [pair, w] : s.weights)
        CHECK(within(emp.probs[lehmer_rank(transposition(4, pair.first, pair.second))], to_double(w)));
}

TEST_CASE("empirical distribution tracks exact evolution")
{
    ShuffleParams p = ShuffleParams::balanced(2, Rational(1, 2));
    StepMeasure s = step_measure(p);
    GroupDistribution start = GroupDistribution::point_mass(4, identity_perm(4));
    for (int t : {1, 5, 20}) {
        GroupDistribution exact = evolve(start, s, t);
        GroupDistribution emp = empirical_distribution(p, t, 1000000, 77 + t);
        double tv = 0;
        for (std::size_t x = 0; x < exact.probs.size(); ++x)
            tv += std::abs(exact.probs[x] - emp.probs[x]);
        CHECK(0.5 * tv <= 0.01);
    }
}

TEST_CASE("fixed points")
{
    CHECK(count_fixed_points(identity_perm(9)) == 9);
    CHECK(count_fixed_points(transposition(9, 2, 5)) == 7);
    std::mt19937_64 rng(5);
    Perm perm = identity_perm(100);
    double sum = 0, sq = 0;
    const int samples = 100000;
    for (int s = 0; s < samples; ++s) {
        std::shuffle(perm.begin(), perm.end(), rng);
        double f = count_fixed_points(perm);
        sum += f;
        sq += f * f;
    }
    double mean = sum / samples;
    double sd = std::sqrt(sq / samples - mean * mean);
    CHECK(std::abs(mean - 1.0) <= 3.0 * sd / std::sqrt(samples));
}

TEST_CASE("histogram is independent of thread count")
{
    ShuffleParams p = ShuffleParams::balanced(10, Rational(1, 2));
    auto one = fixed_point_histogram(p, 50, 5000, 123, 1);
    auto many = fixed_point_histogram(p, 50, 5000, 123, 4);
    CHECK(one == many);
    std::uint64_t total = 0;
    for (auto c : one)
        total += c;
    CHECK(total == 5000);
    CHECK(fixed_point_histogram(p, 50, 5000, 124, 2) != one);
}

TEST_CASE("numeric oracle on two cards")
{
    for (const Rational& b : {Rational(1), Rational(1, 2), Rational(1, 4)}) {
        ShuffleParams p = ShuffleParams::balanced(1, b);
        auto eig = numeric_spectrum_oracle(p);
        REQUIRE(eig.size() == 2);
        Rational d = p.a() - b;
        CHECK(eig[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(eig[1] == doctest::Approx(to_double(d * d / 4)).epsilon(1e-12));
    }
}
