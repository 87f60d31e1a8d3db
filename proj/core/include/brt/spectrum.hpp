#pragma once

#include "brt/tableaux.hpp"

#include <iosfwd>
#include <vector>

namespace brt {

// Deck split A = {1..nA}, B = {nA+1..N}; bias b in (0, 1], a = 2 - b.
class ShuffleParams {
public:
    ShuffleParams(int nA, int nB, Rational b);
    static ShuffleParams balanced(int n, Rational b) { return ShuffleParams(n, n, std::move(b)); }

    int nA() const { return nA_; }
    int nB() const { return nB_; }
    int N() const { return nA_ + nB_; }
    const Rational& b() const { return b_; }
    Rational a() const { return Rational(2) - b_; }
    bool balanced() const { return nA_ == nB_; }
    // The step law has total mass (a nA + b nB)^2 / N^2, which is 1 only when
    // a nA + b nB = N (balanced split, or a = b = 1).
    bool stochastic() const;

private:
    int nA_, nB_;
    Rational b_;
};

struct SpectrumEntry {
    Partition lambda, mu, nu;
    Rational eig;
    BigInt mult;
};

Rational eigenvalue(const ShuffleParams& p, const Partition& lambda, const Partition& mu, const Partition& nu);

constexpr int kSpectrumMaxN = 40;
// One entry per LR triple, lambda in canonical order, then mu, then nu.
std::vector<SpectrumEntry> full_spectrum(const ShuffleParams& p, unsigned threads = 0);

// Classical random transposition eigenvalue 1/n + 2 Diag(mu)/n^2.
Rational rt_eigenvalue(const Partition& mu, int n);
Rational eig_rt_envelope(const ShuffleParams& p, const Partition& mu, const Partition& nu);

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& entries);

}  // namespace brt
