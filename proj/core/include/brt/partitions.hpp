#pragma once

#include "brt/types.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace brt {

class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws InvalidInput if not weakly decreasing or negative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition row(int n);
    static Partition column(int n);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 0 past the last part.
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }
    int first() const { return parts_.empty() ? 0 : parts_[0]; }

    bool contains(const Partition& inner) const;

    // Deterministic order: larger first part first, then lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// "4,3,2"; the empty partition is "-".
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& text);

// Reverse-lexicographic order: (N), (N-1,1), ..., (1^N).
std::vector<Partition> enumerate_partitions(int n);
// Partitions of the given size contained in outer, reverse-lexicographic.
std::vector<Partition> contained_partitions(const Partition& outer, int size);

Partition conjugate(const Partition& p);
// True iff every prefix sum of mu is at least the matching prefix sum of lambda.
bool dominates(const Partition& mu, const Partition& lambda);
long long diag_index(const Partition& p);
long long diag_index_by_contents(const Partition& p);
long long inner_product(const Partition& a, const Partition& b);
Partition add_partitions(const Partition& a, const Partition& b);

BigInt partition_count(int n);
double hardy_ramanujan_estimate(int n);

}  // namespace brt
