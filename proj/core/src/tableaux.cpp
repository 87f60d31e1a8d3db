#include "brt/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace brt {

BigInt count_syt(const Partition& lambda)
{
    Partition conj = conjugate(lambda);
    BigInt hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

namespace {

constexpr int kOpen = std::numeric_limits<int>::max() / 4;

// Row-by-row filler. A row is described by how many copies of each letter it
// holds, which (for weakly increasing rows) determines the row exactly.
class Filler {
public:
    Filler(const SkewShape& shape, int letters, const std::vector<int>* content, bool lattice)
        : letters_(letters), content_(content), lattice_(lattice)
    {
        rows_ = shape.outer.length();
        for (int r = 0; r < rows_; ++r) {
            outer_.push_back(shape.outer[r]);
            inner_.push_back(shape.inner[r]);
        }
    }

    BigInt count()
    {
        std::vector<int> ends(letters_ + 1, kOpen);
        std::vector<int> used(letters_, 0);
        return rows_from(0, ends, used);
    }

    // Free content: every lattice filling is reported by its content.
    void enumerate(const std::function<void(const std::vector<int>&)>& leaf)
    {
        leaf_ = &leaf;
        std::vector<int> ends(letters_ + 1, kOpen);
        std::vector<int> used(letters_, 0);
        walk(0, ends, used);
    }

private:
    template <class Visit>
    void each_row(int r, const std::vector<int>& ends, const std::vector<int>& used, Visit&& visit)
    {
        int len = outer_[r] - inner_[r];
        std::vector<int> n(letters_, 0);
        std::vector<int> new_ends(letters_ + 1);
        new_ends[0] = inner_[r];
        std::function<void(int, int)> pick = [&](int k, int s) {
            if (k == letters_) {
                if (s == len)
                    visit(n, new_ends);
                return;
            }
            int hi = len - s;
            hi = std::min(hi, ends[k] - inner_[r] - s);
            if (content_)
                hi = std::min(hi, (*content_)[k] - used[k]);
            if (lattice_ && k > 0)
                hi = std::min(hi, used[k - 1] - used[k]);
            if (!content_ && k > r)
                hi = 0;
            int lo = k == letters_ - 1 ? len - s : 0;
            for (int c = hi; c >= lo; --c) {
                n[k] = c;
                new_ends[k + 1] = inner_[r] + s + c;
                pick(k + 1, s + c);
            }
            n[k] = 0;
        };
        pick(0, 0);
    }

    BigInt rows_from(int r, const std::vector<int>& ends, const std::vector<int>& used)
    {
        if (r == rows_)
            return used == *content_ ? BigInt(1) : BigInt(0);
        std::vector<int> key;
        key.reserve(2 * letters_ + 2);
        key.push_back(r);
        key.insert(key.end(), ends.begin(), ends.end());
        key.insert(key.end(), used.begin(), used.end());
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;
        BigInt total = 0;
        each_row(r, ends, used, [&](const std::vector<int>& n, const std::vector<int>& new_ends) {
            std::vector<int> next = used;
            for (int k = 0; k < letters_; ++k)
                next[k] += n[k];
            total += rows_from(r + 1, new_ends, next);
        });
        memo_.emplace(std::move(key), total);
        return total;
    }

    void walk(int r, const std::vector<int>& ends, const std::vector<int>& used)
    {
        if (r == rows_) {
            (*leaf_)(used);
            return;
        }
        each_row(r, ends, used, [&](const std::vector<int>& n, const std::vector<int>& new_ends) {
            std::vector<int> next = used;
            for (int k = 0; k < letters_; ++k)
                next[k] += n[k];
            walk(r + 1, new_ends, next);
        });
    }

    int rows_ = 0;
    int letters_;
    const std::vector<int>* content_;
    bool lattice_;
    std::vector<int> outer_, inner_;
    std::map<std::vector<int>, BigInt> memo_;
    const std::function<void(const std::vector<int>&)>* leaf_ = nullptr;
};

int total(const std::vector<int>& v)
{
    int s = 0;
    for (int x : v)
        s += x;
    return s;
}

}  // namespace

BigInt count_skew_fillings(const SkewShape& shape, const std::vector<int>& content, bool lattice)
{
    if (!shape.outer.contains(shape.inner))
        return 0;
    for (int x : content)
        if (x < 0)
            throw InvalidInput("content has a negative entry");
    if (shape.outer.size() - shape.inner.size() != total(content))
        throw InvalidInput("content size does not match the shape");
    if (content.empty())
        return 1;
    Filler f(shape, static_cast<int>(content.size()), &content, lattice);
    return f.count();
}

BigInt count_ssyt(const Partition& lambda, const std::vector<int>& content)
{
    return count_skew_fillings({lambda, Partition()}, content, false);
}

BigInt count_ssyt(const Partition& lambda, const Partition& content)
{
    return count_ssyt(lambda, content.parts());
}

BigInt count_lr(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.size() != mu.size() + nu.size() || !lambda.contains(mu))
        return 0;
    if (!lambda.contains(nu))
        return 0;
    return count_skew_fillings({lambda, mu}, nu.parts(), true);
}

std::vector<LRTerm> lr_support(const Partition& lambda, int nA, int nB)
{
    if (nA < 0 || nB < 0 || lambda.size() != nA + nB)
        throw InvalidInput("lr_support: |lambda| must equal nA + nB");
    std::vector<LRTerm> out;
    for (const Partition& mu : contained_partitions(lambda, nA)) {
        if (nB == 0) {
            out.push_back({mu, Partition(), 1});
            continue;
        }
        std::map<std::vector<int>, BigInt> by_content;
        Filler f({lambda, mu}, lambda.length(), nullptr, true);
        f.enumerate([&](const std::vector<int>& used) { by_content[used] += 1; });
        std::vector<LRTerm> terms;
        for (auto& [content, c] : by_content)
            terms.push_back({mu, Partition(content), c});
        std::sort(terms.begin(), terms.end(), [](const LRTerm& x, const LRTerm& y) { return x.nu < y.nu; });
        for (auto& t : terms)
            out.push_back(std::move(t));
    }
    return out;
}

}  // namespace brt
