#pragma once

#include "brt/partitions.hpp"

#include <functional>
#include <string>
#include <vector>

namespace brt {

// Integer labels on the triangular array of side n. Vertex (r, k) with
// 0 <= k <= r <= n; row 0 is the top vertex.
class Hive {
public:
    explicit Hive(int side);
    // Rows top first; row r must have r + 1 entries.
    static Hive from_rows(const std::vector<std::vector<long long>>& rows);
    // Boundary of the (lambda, mu, nu) hive of the given side, interior zero.
    static Hive with_boundary(const Partition& lambda, const Partition& mu, const Partition& nu, int side);

    int side() const { return side_; }
    long long at(int r, int k) const { return labels_[index(r, k)]; }
    long long& at(int r, int k) { return labels_[index(r, k)]; }

    std::string dump() const;

private:
    static int index(int r, int k) { return r * (r + 1) / 2 + k; }
    int side_;
    std::vector<long long> labels_;
};

bool check_rhombus(const Hive& h);
bool parallelogram_ok(const Hive& h);
// Number of parallelogram inequalities that hold, and the total checked.
std::pair<long long, long long> parallelogram_tally(const Hive& h);

int hive_side(const Partition& lambda, const Partition& mu, const Partition& nu);
BigInt count_hives(const Partition& lambda, const Partition& mu, const Partition& nu);
// Calls visit on every integral hive with this boundary.
void for_each_hive(const Partition& lambda, const Partition& mu, const Partition& nu,
                   const std::function<void(const Hive&)>& visit);

}  // namespace brt
