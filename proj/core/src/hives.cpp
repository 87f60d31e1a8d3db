#include "brt/hives.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace brt {

Hive::Hive(int side) : side_(side), labels_((side + 1) * (side + 2) / 2, 0)
{
    if (side < 0)
        throw InvalidInput("hive side must be non-negative");
}

Hive Hive::from_rows(const std::vector<std::vector<long long>>& rows)
{
    if (rows.empty())
        throw InvalidInput("hive needs at least one row");
    Hive h(static_cast<int>(rows.size()) - 1);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != r + 1)
            throw InvalidInput("hive row has the wrong length");
        for (std::size_t k = 0; k <= r; ++k)
            h.at(static_cast<int>(r), static_cast<int>(k)) = rows[r][k];
    }
    return h;
}

Hive Hive::with_boundary(const Partition& lambda, const Partition& mu, const Partition& nu, int side)
{
    if (lambda.size() != mu.size() + nu.size())
        throw InvalidInput("hive boundary needs |lambda| = |mu| + |nu|");
    if (lambda.length() > side || mu.length() > side || nu.length() > side)
        throw InvalidInput("hive side too small for the boundary");
    Hive h(side);
    long long sl = 0, sm = 0;
    for (int r = 1; r <= side; ++r) {
        sl += lambda[r - 1];
        sm += mu[r - 1];
        h.at(r, 0) = sl;
        h.at(r, r) = sm;
    }
    long long sb = mu.size();
    for (int k = 1; k <= side; ++k) {
        sb += nu[k - 1];
        h.at(side, side - k) = sb;
    }
    return h;
}

std::string Hive::dump() const
{
    std::ostringstream out;
    for (int r = 0; r <= side_; ++r) {
        for (int k = 0; k <= r; ++k)
            out << (k ? " " : "") << at(r, k);
        out << '\n';
    }
    return out.str();
}

namespace {

// A rhombus or parallelogram: obtuse pair (o1, o2), acute pair (a1, a2).
struct Quad {
    std::array<int, 2> o1, o2, a1, a2;
};

template <class F>
void for_each_parallelogram(int n, int max_step, F&& f)
{
    for (int p = 1; p <= max_step; ++p) {
        for (int q = 1; q <= max_step; ++q) {
            // Sides: right and down-left, acute corners at the ends of the long diagonal.
            for (int r = 0; r + p <= n; ++r)
                for (int k = 0; k + q <= r; ++k)
                    f(Quad{{r, k}, {r + p, k + q}, {r, k + q}, {r + p, k}});
            // Sides: down-left and down-right from an acute top corner.
            for (int r = 0; r + p + q <= n; ++r)
                for (int k = 0; k <= r; ++k)
                    f(Quad{{r + p, k}, {r + q, k + q}, {r, k}, {r + p + q, k + q}});
            // Sides: right and down-right from an acute left corner.
            for (int r = 0; r + p <= n; ++r)
                for (int k = 0; k + q <= r; ++k)
                    f(Quad{{r, k + q}, {r + p, k + p}, {r, k}, {r + p, k + p + q}});
        }
    }
}

bool holds(const Hive& h, const Quad& q)
{
    return h.at(q.o1[0], q.o1[1]) + h.at(q.o2[0], q.o2[1]) >= h.at(q.a1[0], q.a1[1]) + h.at(q.a2[0], q.a2[1]);
}

}  // namespace

bool check_rhombus(const Hive& h)
{
    bool ok = true;
    for_each_parallelogram(h.side(), 1, [&](const Quad& q) { ok = ok && holds(h, q); });
    return ok;
}

std::pair<long long, long long> parallelogram_tally(const Hive& h)
{
    long long good = 0, all = 0;
    for_each_parallelogram(h.side(), h.side(), [&](const Quad& q) {
        ++all;
        if (holds(h, q))
            ++good;
    });
    return {good, all};
}

bool parallelogram_ok(const Hive& h)
{
    auto [good, all] = parallelogram_tally(h);
    return good == all;
}

int hive_side(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    return std::max(lambda.length(), mu.length() + nu.length());
}

namespace {

struct Bound {
    // Signed sum s of the other three vertices: x <= s if upper, else x >= -s.
    std::array<int, 3> idx;
    std::array<int, 3> sign;
    bool upper;
};

class HiveCounter {
public:
    HiveCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : hive_(Hive::with_boundary(lambda, mu, nu, hive_side(lambda, mu, nu)))
    {
        int n = hive_.side();
        for (int r = 2; r < n; ++r)
            for (int k = 1; k < r; ++k)
                interior_.push_back({r, k});
        order_.assign((n + 1) * (n + 2) / 2, -1);
        for (std::size_t i = 0; i < interior_.size(); ++i)
            order_[flat(interior_[i][0], interior_[i][1])] = static_cast<int>(i);
        constraints_.resize(interior_.size());
        // Attach each rhombus to its last-assigned interior vertex.
        for_each_parallelogram(n, 1, [&](const Quad& q) {
            std::array<std::array<int, 2>, 4> v{q.o1, q.o2, q.a1, q.a2};
            std::array<int, 4> s{1, 1, -1, -1};
            int last = -1, pos = -1;
            for (int i = 0; i < 4; ++i) {
                int o = order_[flat(v[i][0], v[i][1])];
                if (o > last) {
                    last = o;
                    pos = i;
                }
            }
            if (last < 0) {
                boundary_ok_ = boundary_ok_ && holds(hive_, q);
                return;
            }
            Bound b{};
            int j = 0;
            for (int i = 0; i < 4; ++i) {
                if (i == pos)
                    continue;
                b.idx[j] = flat(v[i][0], v[i][1]);
                // s_pos * x + sum s_i * x_i >= 0
                b.sign[j] = s[i];
                ++j;
            }
            // If s_pos = +1: x >= -sum s_i x_i. If -1: x <= sum s_i x_i.
            b.upper = s[pos] < 0;
            constraints_[last].push_back(b);
        });
        values_.resize((n + 1) * (n + 2) / 2);
        for (int r = 0; r <= n; ++r)
            for (int k = 0; k <= r; ++k)
                values_[flat(r, k)] = hive_.at(r, k);
    }

    template <class Leaf>
    void run(Leaf&& leaf)
    {
        if (!boundary_ok_)
            return;
        descend(0, leaf);
    }

    Hive current() const
    {
        Hive h = hive_;
        for (int r = 0; r <= h.side(); ++r)
            for (int k = 0; k <= r; ++k)
                h.at(r, k) = values_[flat(r, k)];
        return h;
    }

private:
    static int flat(int r, int k) { return r * (r + 1) / 2 + k; }

    template <class Leaf>
    void descend(std::size_t i, Leaf& leaf)
    {
        if (i == interior_.size()) {
            leaf();
            return;
        }
        long long lo = std::numeric_limits<long long>::min();
        long long hi = std::numeric_limits<long long>::max();
        for (const Bound& b : constraints_[i]) {
            long long s = 0;
            for (int j = 0; j < 3; ++j)
                s += b.sign[j] * values_[b.idx[j]];
            if (b.upper)
                hi = std::min(hi, s);
            else
                lo = std::max(lo, -s);
        }
        if (lo == std::numeric_limits<long long>::min() || hi == std::numeric_limits<long long>::max())
            throw std::logic_error("hive vertex without a two-sided bound");
        int at = flat(interior_[i][0], interior_[i][1]);
        for (long long x = lo; x <= hi; ++x) {
            values_[at] = x;
            descend(i + 1, leaf);
        }
    }

    Hive hive_;
    std::vector<std::array<int, 2>> interior_;
    std::vector<int> order_;
    std::vector<std::vector<Bound>> constraints_;
    std::vector<long long> values_;
    bool boundary_ok_ = true;
};

}  // namespace

BigInt count_hives(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.size() != mu.size() + nu.size())
        throw InvalidInput("count_hives: |lambda| must equal |mu| + |nu|");
    HiveCounter counter(lambda, mu, nu);
    BigInt total = 0;
    counter.run([&] { total += 1; });
    return total;
}

void for_each_hive(const Partition& lambda, const Partition& mu, const Partition& nu,
                   const std::function<void(const Hive&)>& visit)
{
    if (lambda.size() != mu.size() + nu.size())
        throw InvalidInput("for_each_hive: |lambda| must equal |mu| + |nu|");
    HiveCounter counter(lambda, mu, nu);
    counter.run([&] { visit(counter.current()); });
}

}  // namespace brt
