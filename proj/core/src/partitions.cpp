#include "brt/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace brt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw InvalidInput("partition has a negative part");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidInput("partition parts must be weakly decreasing");
        if (parts_[i] == 0)
            throw InvalidInput("zero part before a positive part");
        size_ += parts_[i];
    }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int n)
{
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::column(int n)
{
    return Partition(std::vector<int>(n, 1));
}

bool Partition::contains(const Partition& inner) const
{
    if (inner.length() > length())
        return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts_[i] > parts_[i])
            return false;
    return true;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b)
{
    // Lexicographic descending is the canonical order, so compare reversed.
    if (a.parts_ == b.parts_)
        return std::strong_ordering::equal;
    return std::lexicographical_compare(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end())
        ? std::strong_ordering::less
        : std::strong_ordering::greater;
}

std::string to_string(const Partition& p)
{
    if (p.empty())
        return "-";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text)
{
    if (text == "-" || text.empty())
        return Partition();
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidInput("malformed partition: " + text);
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

namespace {

void enumerate_rec(int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(remaining, cap); k >= 1; --k) {
        cur.push_back(k);
        enumerate_rec(remaining - k, k, cur, out);
        cur.pop_back();
    }
}

void contained_rec(const Partition& outer, int row, int remaining, int cap, std::vector<int>& cur,
                   std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (row >= outer.length())
        return;
    int upper = std::min({remaining, cap, outer[row]});
    for (int k = upper; k >= 1; --k) {
        // Rows below can hold at most k each, bounded by outer.
        long long room = 0;
        for (int r = row + 1; r < outer.length() && room < remaining - k; ++r)
            room += std::min(k, outer[r]);
        if (room < remaining - k)
            break;
        cur.push_back(k);
        contained_rec(outer, row + 1, remaining - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw InvalidInput("enumerate_partitions: negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> contained_partitions(const Partition& outer, int size)
{
    std::vector<Partition> out;
    if (size < 0 || size > outer.size())
        return out;
    std::vector<int> cur;
    contained_rec(outer, 0, size, outer.first(), cur, out);
    return out;
}

Partition conjugate(const Partition& p)
{
    std::vector<int> c(p.first(), 0);
    for (int i = 0; i < p.length(); ++i)
        for (int k = 0; k < p[i]; ++k)
            ++c[k];
    return Partition(c);
}

bool dominates(const Partition& mu, const Partition& lambda)
{
    long long sm = 0, sl = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int k = 0; k < len; ++k) {
        sm += mu[k];
        sl += lambda[k];
        if (sl > sm)
            return false;
    }
    return true;
}

long long diag_index(const Partition& p)
{
    auto c2 = [](long long x) { return x * (x - 1) / 2; };
    long long s = 0;
    for (int x : p.parts())
        s += c2(x);
    Partition c = conjugate(p);
    for (int x : c.parts())
        s -= c2(x);
    return s;
}

long long diag_index_by_contents(const Partition& p)
{
    long long s = 0;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j)
            s += j - i;
    return s;
}

long long inner_product(const Partition& a, const Partition& b)
{
    long long s = 0;
    int len = std::min(a.length(), b.length());
    for (int i = 0; i < len; ++i)
        s += static_cast<long long>(a[i]) * b[i];
    return s;
}

Partition add_partitions(const Partition& a, const Partition& b)
{
    std::vector<int> s(std::max(a.length(), b.length()));
    for (std::size_t i = 0; i < s.size(); ++i)
        s[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
    return Partition(s);
}

BigInt partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<BigInt> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[m] += p[m - k];
    return p[n];
}

double hardy_ramanujan_estimate(int n)
{
    if (n < 1)
        throw InvalidInput("hardy_ramanujan_estimate: n must be positive");
    double x = static_cast<double>(n);
    return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) / (4.0 * x * std::sqrt(3.0));
}

}  // namespace brt
