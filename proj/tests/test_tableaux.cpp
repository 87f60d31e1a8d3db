#include "doctest.h"
#include "oracles.hpp"

#include "brt/tableaux.hpp"

#include <random>
#include <sstream>

using namespace brt;

TEST_CASE("count_syt examples")
{
    CHECK(count_syt(Partition::row(9)) == 1);
    CHECK(count_syt(Partition{3, 1}) == 3);
    CHECK(count_syt(Partition()) == 1);
    BigInt s = 0;
    for (const auto& p : enumerate_partitions(4))
        s += count_syt(p) * count_syt(p);
    CHECK(s == 24);
}

TEST_CASE("hook length equals corner recursion up to size 10")
{
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(count_syt(p) == oracle::syt_by_corners(p));
}

TEST_CASE("sum of squared dimensions is N!")
{
    for (int n = 0; n <= 10; ++n) {
        BigInt s = 0;
        for (const auto& p : enumerate_partitions(n))
            s += count_syt(p) * count_syt(p);
        CHECK(s == factorial(n));
    }
}

TEST_CASE("Kostka numbers match cell-by-cell filling")
{
    for (int n = 1; n <= 6; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& la : ps)
            for (const auto& c : ps)
                CHECK(count_ssyt(la, c) == oracle::kostka_by_cells(la, c.parts()));
    }
    // compositions
    std::vector<std::vector<int>> comps{{1, 2}, {0, 3, 1}, {2, 0, 2}, {1, 1, 2, 1}, {1, 3, 2}};
    for (const auto& c : comps) {
        int n = 0;
        for (int x : c)
            n += x;
        for (const auto& la : enumerate_partitions(n))
            CHECK(count_ssyt(la, c) == oracle::kostka_by_cells(la, c));
    }
}

TEST_CASE("Kostka basics")
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& la : enumerate_partitions(n))
            CHECK(count_ssyt(la, la) == 1);
    CHECK_THROWS_AS(count_ssyt(Partition{2, 1}, Partition{2}), InvalidInput);
    // content order does not matter
    CHECK(count_ssyt(Partition{3, 2, 1}, std::vector<int>{1, 2, 3}) == count_ssyt(Partition{3, 2, 1}, Partition{3, 2, 1}));
    // content 1^N gives f_lambda
    for (const auto& la : enumerate_partitions(7))
        CHECK(count_ssyt(la, std::vector<int>(7, 1)) == count_syt(la));
}

TEST_CASE("Kostka numbers for hook contents")
{
    // lambda = (N - j, T), content (N - t, 1^t)
    std::ostringstream report;
    for (int j = 0; j <= 3; ++j) {
        for (const auto& tail : enumerate_partitions(j)) {
            for (int t = 0; t <= 4; ++t) {
                int smallest = -1;
                for (int n = j + tail.first(); n <= 14; ++n) {
                    if (n - j < tail.first() || n < t)
                        continue;
                    std::vector<int> parts{n - j};
                    parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
                    Partition la(parts);
                    std::vector<int> content;
                    if (n - t > 0)
                        content.push_back(n - t);
                    content.insert(content.end(), t, 1);
                    BigInt k = count_ssyt(la, content);
                    if (t < j) {
                        CHECK(k == 0);
                        continue;
                    }
                    bool closed = k == binomial(t, j) * count_syt(tail);
                    if (closed && smallest < 0)
                        smallest = n;
                    if (smallest >= 0)
                        CHECK(closed);
                }
                if (t >= j) {
                    // the N - t ones must not sit above the tail
                    CHECK(smallest == std::max(t + tail.first(), j + tail.first()));
                    report << "T=" << to_string(tail) << " t=" << t << " N>=" << smallest << "; ";
                }
            }
        }
    }
    MESSAGE("closed form holds from: " << report.str());
}

TEST_CASE("LR coefficient examples")
{
    CHECK(count_lr(Partition{4, 3, 2}, Partition{3, 2, 1}, Partition{2, 1}) == 2);
    CHECK(count_lr(Partition{2, 1}, Partition{3}, Partition()) == 0);
    CHECK(count_lr(Partition{2, 1}, Partition{2, 1}, Partition()) == 1);
    CHECK(count_lr(Partition{3, 1}, Partition{1, 1, 1}, Partition{1}) == 0);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto ps = enumerate_partitions(1 + static_cast<int>(rng() % 6));
        auto qs = enumerate_partitions(1 + static_cast<int>(rng() % 6));
        const auto& mu = ps[rng() % ps.size()];
        const auto& nu = qs[rng() % qs.size()];
        CHECK(count_lr(add_partitions(mu, nu), mu, nu) == 1);
    }
}

TEST_CASE("LR coefficients match cell-by-cell filling up to size 7")
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& la : enumerate_partitions(n))
            for (int m = 0; m <= n; ++m)
                for (const auto& mu : enumerate_partitions(m))
                    for (const auto& nu : enumerate_partitions(n - m))
                        CHECK(count_lr(la, mu, nu) == oracle::lr_by_cells(la, mu, nu));
}

TEST_CASE("lr_support agrees with count_lr")
{
    for (int n = 0; n <= 8; ++n) {
        for (const auto& la : enumerate_partitions(n)) {
            for (int m = 0; m <= n; ++m) {
                std::vector<LRTerm> want;
                for (const auto& mu : enumerate_partitions(m))
                    for (const auto& nu : enumerate_partitions(n - m)) {
                        BigInt c = count_lr(la, mu, nu);
                        if (c > 0)
                            want.push_back({mu, nu, c});
                    }
                auto got = lr_support(la, m, n - m);
                REQUIRE(got.size() == want.size());
                for (std::size_t i = 0; i < got.size(); ++i) {
                    CHECK(got[i].mu == want[i].mu);
                    CHECK(got[i].nu == want[i].nu);
                    CHECK(got[i].c == want[i].c);
                }
            }
        }
    }
}

TEST_CASE("lr_support examples")
{
    for (int n = 1; n <= 6; ++n) {
        auto row = lr_support(Partition::row(2 * n), n, n);
        REQUIRE(row.size() == 1);
        CHECK(row[0].mu == Partition::row(n));
        CHECK(row[0].nu == Partition::row(n));
        CHECK(row[0].c == 1);
        auto col = lr_support(Partition::column(2 * n), n, n);
        REQUIRE(col.size() == 1);
        CHECK(col[0].mu == Partition::column(n));
        CHECK(col[0].nu == Partition::column(n));
    }
    CHECK_THROWS_AS(lr_support(Partition{2, 1}, 1, 1), InvalidInput);
}

TEST_CASE("LR identities up to size 8")
{
    for (int n = 0; n <= 8; ++n) {
        auto lambdas = enumerate_partitions(n);
        for (const auto& la : lambdas) {
            for (int m = 0; m <= n; ++m) {
                BigInt s = 0;
                for (const auto& t : lr_support(la, m, n - m)) {
                    s += t.c * count_syt(t.mu) * count_syt(t.nu);
                    CHECK(dominates(add_partitions(t.mu, t.nu), la));
                    CHECK(count_lr(conjugate(la), conjugate(t.mu), conjugate(t.nu)) == t.c);
                }
                CHECK(s == count_syt(la));
            }
        }
        for (int m = 0; m <= n; ++m) {
            for (const auto& mu : enumerate_partitions(m)) {
                for (const auto& nu : enumerate_partitions(n - m)) {
                    BigInt rhs = 0;
                    for (const auto& la : lambdas)
                        rhs += count_lr(la, mu, nu) * count_syt(la);
                    CHECK(binomial(n, m) * count_syt(mu) * count_syt(nu) == rhs);
                }
            }
        }
    }
}

TEST_CASE("first-row LR bound")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& la : enumerate_partitions(2 * n)) {
            int j = 2 * n - la.first();
            for (const auto& t : lr_support(la, n, n)) {
                int i1 = n - t.mu.first(), i2 = n - t.nu.first();
                CHECK(i1 + i2 <= j);
            }
        }
    }
}

TEST_CASE("dimension bound for long first rows")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto& la : enumerate_partitions(2 * n)) {
            int j = 2 * n - la.first();
            // f^2 j! <= (2n)^{2j}
            BigInt f = count_syt(la);
            BigInt rhs = 1;
            for (int k = 0; k < 2 * j; ++k)
                rhs *= 2 * n;
            CHECK(f * f * factorial(j) <= rhs);
        }
    }
}
