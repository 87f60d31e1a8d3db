#pragma once

#include "brt/partitions.hpp"

#include <vector>

namespace brt {

struct SkewShape {
    Partition outer;
    Partition inner;
};

struct LRTerm {
    Partition mu;
    Partition nu;
    BigInt c;
};

// Number of standard Young tableaux, by the hook-length formula.
BigInt count_syt(const Partition& lambda);

// Kostka number K_{lambda, content}; content may be any composition of |lambda|.
BigInt count_ssyt(const Partition& lambda, const std::vector<int>& content);
BigInt count_ssyt(const Partition& lambda, const Partition& content);

// Semistandard fillings of outer/inner with the given content, optionally
// restricted to lattice reading words (rows right to left, top to bottom).
BigInt count_skew_fillings(const SkewShape& shape, const std::vector<int>& content, bool lattice);

// Littlewood-Richardson coefficient c^lambda_{mu nu}.
BigInt count_lr(const Partition& lambda, const Partition& mu, const Partition& nu);

// All (mu |- nA, nu |- nB) with c^lambda_{mu nu} > 0, ordered by mu then nu.
std::vector<LRTerm> lr_support(const Partition& lambda, int nA, int nB);

}  // namespace brt
