#include "doctest.h"
#include "oracles.hpp"

#include "brt/partitions.hpp"

#include <random>

using namespace brt;

TEST_CASE("enumerate_partitions small cases")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{Partition{1}});
    std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(enumerate_partitions(4) == four);
}

TEST_CASE("enumerate_partitions matches composition oracle and is reverse-lex")
{
    for (int n = 0; n <= 12; ++n) {
        auto got = enumerate_partitions(n);
        auto want = oracle::partitions_from_compositions(n);
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        CHECK(BigInt(got.size()) == partition_count(n));
        for (std::size_t i = 1; i < got.size(); ++i)
            CHECK(std::lexicographical_compare(got[i].parts().begin(), got[i].parts().end(), got[i - 1].parts().begin(),
                                               got[i - 1].parts().end()));
    }
}

TEST_CASE("partition construction rejects bad input")
{
    CHECK_THROWS_AS(Partition({1, 2}), InvalidInput);
    CHECK_THROWS_AS(Partition({2, -1}), InvalidInput);
    CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
    CHECK(Partition({3, 1}).size() == 4);
}

TEST_CASE("serialization")
{
    CHECK(to_string(Partition{4, 3, 2}) == "4,3,2");
    CHECK(to_string(Partition()) == "-");
    CHECK(parse_partition("4,3,2") == Partition{4, 3, 2});
    CHECK(parse_partition("-") == Partition());
    CHECK_THROWS_AS(parse_partition("2,3"), InvalidInput);
    CHECK_THROWS_AS(parse_partition("2,x"), InvalidInput);
    for (const auto& p : enumerate_partitions(7))
        CHECK(parse_partition(to_string(p)) == p);
}

TEST_CASE("conjugate")
{
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition::row(5)) == Partition::column(5));
    CHECK(conjugate(Partition()) == Partition());
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : enumerate_partitions(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dominance")
{
    CHECK(dominates(Partition{4}, Partition{2, 2}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    // different sizes compare by prefix sums
    CHECK(dominates(Partition{3, 2}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{3}, Partition{2, 2}));
    for (int n = 0; n <= 8; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& mu : ps)
            for (const auto& la : ps)
                CHECK(dominates(mu, la) == dominates(conjugate(la), conjugate(mu)));
    }
}

TEST_CASE("diagonal index")
{
    CHECK(diag_index(Partition::row(6)) == 15);
    CHECK(diag_index(Partition{3, 1}) == 2);
    for (int n = 0; n <= 12; ++n) {
        for (const auto& p : enumerate_partitions(n)) {
            CHECK(diag_index(p) == diag_index_by_contents(p));
            CHECK(diag_index(conjugate(p)) == -diag_index(p));
            if (n > 0)
                CHECK(2 * diag_index(p) <= static_cast<long long>(p.first() - 1) * n);
        }
    }
}

TEST_CASE("dominance makes diag and inner products monotone")
{
    for (int n = 1; n <= 8; ++n) {
        auto ps = enumerate_partitions(n);
        for (const auto& la : ps) {
            for (const auto& mu : ps) {
                if (!dominates(la, mu))
                    continue;
                CHECK(diag_index(la) >= diag_index(mu));
                for (const auto& nu : ps)
                    CHECK(inner_product(la, nu) >= inner_product(mu, nu));
            }
        }
    }
}

TEST_CASE("inner product")
{
    CHECK(inner_product(Partition::row(7), Partition::row(7)) == 49);
    CHECK(inner_product(Partition{3, 1}, Partition{2, 2}) == 8);
    for (int n : {10, 20, 50}) {
        Partition p{7 * n / 10, 3 * n / 10};
        CHECK(100 * inner_product(p, p) == 58LL * n * n);
    }
}

TEST_CASE("addition and diagonal additivity")
{
    CHECK(add_partitions(Partition{3, 1}, Partition()) == Partition{3, 1});
    CHECK(add_partitions(Partition{2, 1}, Partition{1, 1}) == Partition{3, 2});
    CHECK(diag_index(Partition{3, 2}) == 2);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        auto ps = enumerate_partitions(1 + static_cast<int>(rng() % 10));
        auto qs = enumerate_partitions(static_cast<int>(rng() % 10));
        const auto& a = ps[rng() % ps.size()];
        const auto& b = qs[rng() % qs.size()];
        Partition s = add_partitions(a, b);
        CHECK(s.size() == a.size() + b.size());
        CHECK(diag_index(s) == diag_index(a) + diag_index(b) + inner_product(a, b));
    }
}

TEST_CASE("partition counts")
{
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(100) == BigInt("190569292"));
    double ratio = hardy_ramanujan_estimate(100) / to_double(partition_count(100));
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
    CHECK_THROWS_AS(hardy_ramanujan_estimate(0), InvalidInput);
}

TEST_CASE("contained partitions")
{
    for (int n = 0; n <= 8; ++n) {
        for (const auto& outer : enumerate_partitions(n)) {
            for (int k = 0; k <= n; ++k) {
                std::vector<Partition> want;
                for (const auto& p : enumerate_partitions(k))
                    if (outer.contains(p))
                        want.push_back(p);
                CHECK(contained_partitions(outer, k) == want);
            }
        }
    }
}
