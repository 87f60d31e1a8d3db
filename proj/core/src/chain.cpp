#include "brt/chain.hpp"

#include "brt/parallel.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace brt {

std::uint64_t lehmer_rank(const Perm& perm)
{
    int n = static_cast<int>(perm.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (perm[j] < perm[i])
                ++smaller;
        rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

Perm lehmer_unrank(std::uint64_t rank, int n)
{
    std::vector<int> digits(n);
    for (int i = n - 1; i >= 0; --i) {
        std::uint64_t base = static_cast<std::uint64_t>(n - i);
        digits[i] = static_cast<int>(rank % base);
        rank /= base;
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    Perm perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = pool[digits[i]];
        pool.erase(pool.begin() + digits[i]);
    }
    return perm;
}

Perm compose(const Perm& left, const Perm& right)
{
    Perm out(right.size());
    for (std::size_t i = 0; i < right.size(); ++i)
        out[i] = left[right[i]];
    return out;
}

Perm identity_perm(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm transposition(int n, int i, int j)
{
    Perm p = identity_perm(n);
    std::swap(p[i], p[j]);
    return p;
}

StepMeasure step_measure(const ShuffleParams& p)
{
    StepMeasure m;
    int n = p.N();
    m.n_cards = n;
    Rational a = p.a(), b = p.b();
    Rational n2 = Rational(n) * n;
    m.id_mass = (a * a * p.nA() + b * b * p.nB()) / n2;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational wi = i < p.nA() ? a : b;
            Rational wj = j < p.nA() ? a : b;
            m.weights[{i, j}] = 2 * wi * wj / n2;
        }
    }
    return m;
}

GroupDistribution GroupDistribution::point_mass(int n, const Perm& at)
{
    GroupDistribution d;
    d.n_cards = n;
    d.probs.assign(static_cast<std::size_t>(to_double(factorial(n))), 0.0);
    d.probs[lehmer_rank(at)] = 1.0;
    return d;
}

GroupDistribution GroupDistribution::uniform(int n)
{
    GroupDistribution d;
    d.n_cards = n;
    std::size_t states = static_cast<std::size_t>(to_double(factorial(n)));
    d.probs.assign(states, 1.0 / static_cast<double>(states));
    return d;
}

ExactDistribution ExactDistribution::point_mass(int n, const Perm& at)
{
    ExactDistribution d;
    d.n_cards = n;
    d.probs.assign(static_cast<std::size_t>(to_double(factorial(n))), Rational(0));
    d.probs[lehmer_rank(at)] = 1;
    return d;
}

std::vector<std::uint32_t> left_action_table(int n, int i, int j)
{
    std::size_t states = static_cast<std::size_t>(to_double(factorial(n)));
    std::vector<std::uint32_t> table(states);
    for (std::size_t x = 0; x < states; ++x) {
        Perm p = lehmer_unrank(x, n);
        for (int& v : p) {
            if (v == i)
                v = j;
            else if (v == j)
                v = i;
        }
        table[x] = static_cast<std::uint32_t>(lehmer_rank(p));
    }
    return table;
}

namespace {

void check_measure(const StepMeasure& m, int n_cards, int guard)
{
    if (m.n_cards != n_cards)
        throw InvalidInput("distribution and step measure disagree on the deck size");
    if (n_cards > guard)
        throw ResourceLimit("deck too large for dense evolution");
}

}  // namespace

GroupDistribution evolve(const GroupDistribution& dist, const StepMeasure& m, int t)
{
    check_measure(m, dist.n_cards, kEvolveMaxN);
    if (t < 0)
        throw InvalidInput("evolve: negative time");
    std::vector<std::pair<double, std::vector<std::uint32_t>>> moves;
    for (const auto& [pair, w] : m.weights)
        if (w != 0)
            moves.emplace_back(to_double(w), left_action_table(dist.n_cards, pair.first, pair.second));
    double id = to_double(m.id_mass);
    std::vector<double> cur = dist.probs, next(cur.size());
    for (int s = 0; s < t; ++s) {
        for (std::size_t x = 0; x < cur.size(); ++x)
            next[x] = id * cur[x];
        for (const auto& [w, table] : moves)
            for (std::size_t x = 0; x < cur.size(); ++x)
                next[x] += w * cur[table[x]];
        std::swap(cur, next);
    }
    GroupDistribution out;
    out.n_cards = dist.n_cards;
    out.probs = std::move(cur);
    return out;
}

ExactDistribution evolve_exact(const ExactDistribution& dist, const StepMeasure& m, int t)
{
    check_measure(m, dist.n_cards, kExactMaxN);
    if (t < 0)
        throw InvalidInput("evolve_exact: negative time");
    std::vector<std::pair<Rational, std::vector<std::uint32_t>>> moves;
    for (const auto& [pair, w] : m.weights)
        if (w != 0)
            moves.emplace_back(w, left_action_table(dist.n_cards, pair.first, pair.second));
    std::vector<Rational> cur = dist.probs, next(cur.size());
    for (int s = 0; s < t; ++s) {
        for (std::size_t x = 0; x < cur.size(); ++x)
            next[x] = m.id_mass * cur[x];
        for (const auto& [w, table] : moves)
            for (std::size_t x = 0; x < cur.size(); ++x)
                if (cur[table[x]] != 0)
                    next[x] += w * cur[table[x]];
        std::swap(cur, next);
    }
    ExactDistribution out;
    out.n_cards = dist.n_cards;
    out.probs = std::move(cur);
    return out;
}

double tv_to_uniform(const GroupDistribution& dist)
{
    double u = 1.0 / static_cast<double>(dist.probs.size());
    double s = 0.0;
    for (double p : dist.probs)
        s += std::abs(p - u);
    return 0.5 * s;
}

Rational tv_to_uniform(const ExactDistribution& dist)
{
    Rational u(1, static_cast<long long>(dist.probs.size()));
    Rational s = 0;
    for (const Rational& p : dist.probs)
        s += abs(p - u);
    return s / 2;
}

ExactWalk::ExactWalk(const StepMeasure& m) : n_(m.n_cards)
{
    if (n_ > kExactMaxN)
        throw ResourceLimit("deck too large for exact evolution");
    states_ = static_cast<std::size_t>(to_double(factorial(n_)));
    BigInt d = denominator(m.id_mass);
    for (const auto& [pair, w] : m.weights)
        d = boost::multiprecision::lcm(d, denominator(w));
    scale_ = d;
    id_weight_ = numerator(Rational(m.id_mass * d));
    for (const auto& [pair, w] : m.weights)
        if (w != 0)
            moves_.emplace_back(numerator(Rational(w * d)), left_action_table(n_, pair.first, pair.second));
    num_.assign(states_, BigInt(0));
    num_[0] = 1;
    denominator_ = 1;
}

void ExactWalk::step()
{
    std::vector<BigInt> next(states_);
    for (std::size_t x = 0; x < states_; ++x)
        next[x] = id_weight_ * num_[x];
    for (const auto& [w, table] : moves_)
        for (std::size_t x = 0; x < states_; ++x) {
            const BigInt& v = num_[table[x]];
            if (v != 0)
                next[x] += w * v;
        }
    num_ = std::move(next);
    denominator_ *= scale_;
    ++time_;
}

Rational ExactWalk::prob(std::size_t rank) const
{
    return Rational(num_.at(rank), denominator_);
}

std::vector<Rational> ExactWalk::distribution() const
{
    std::vector<Rational> out(states_);
    for (std::size_t x = 0; x < states_; ++x)
        out[x] = prob(x);
    return out;
}

double ExactWalk::tv_to_uniform() const
{
    // sum |num/D^t - 1/N!| = sum |N! num - D^t| / (N! D^t)
    BigInt states(states_);
    BigInt s = 0;
    for (const BigInt& v : num_) {
        BigInt diff = states * v - denominator_;
        s += diff < 0 ? BigInt(-diff) : diff;
    }
    return to_double(Rational(s, 2 * states * denominator_));
}

std::vector<Rational> ExactWalk::pushforward(const std::function<int(const Perm&)>& stat, int bins) const
{
    std::vector<BigInt> acc(bins, 0);
    for (std::size_t x = 0; x < states_; ++x) {
        int k = stat(lehmer_unrank(x, n_));
        if (k < 0 || k >= bins)
            throw InvalidInput("pushforward: statistic outside the bin range");
        acc[k] += num_[x];
    }
    std::vector<Rational> out(bins);
    for (int k = 0; k < bins; ++k)
        out[k] = Rational(acc[k], denominator_);
    return out;
}

BiasedCardSampler::BiasedCardSampler(const ShuffleParams& p) : nA_(p.nA()), nB_(p.nB())
{
    if (!p.stochastic())
        throw InvalidInput("this split and bias do not give a probability measure on cards");
    // P(card in A) = a nA / N with a = (2q - p)/q for b = p/q.
    BigInt num = numerator(p.b()), den = denominator(p.b());
    BigInt range = den * p.N();
    BigInt cut = (2 * den - num) * p.nA();
    if (range > BigInt(std::uint64_t(1) << 62))
        throw InvalidInput("bias denominator too large for the sampler");
    range_ = range.convert_to<std::uint64_t>();
    cut_ = cut.convert_to<std::uint64_t>();
}

int BiasedCardSampler::operator()(std::mt19937_64& rng) const
{
    std::uint64_t r = uniform_below(rng, range_);
    if (r < cut_)
        return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nA_)));
    return nA_ + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(nB_)));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream)
{
    // splitmix64 finalizer over a stream-offset state
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound <= 1)
        return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

namespace {

// Perm with inverse kept in sync so left multiplication is O(1).
struct WalkState {
    Perm perm, where;

    explicit WalkState(int n) : perm(identity_perm(n)), where(identity_perm(n)) {}

    void swap_values(int i, int j)
    {
        if (i == j)
            return;
        int pi = where[i], pj = where[j];
        perm[pi] = j;
        perm[pj] = i;
        std::swap(where[i], where[j]);
    }
};

void run_walk(WalkState& s, const BiasedCardSampler& draw, std::mt19937_64& rng, long long t)
{
    for (long long k = 0; k < t; ++k) {
        int i = draw(rng);
        int j = draw(rng);
        s.swap_values(i, j);
    }
}

constexpr std::uint64_t kBlock = 1024;

template <class PerSample>
void sample_blocks(const ShuffleParams& p, long long t, std::uint64_t samples, std::uint64_t seed,
                   unsigned threads, PerSample&& per_sample, std::size_t slots,
                   std::vector<std::uint64_t>& merged)
{
    if (t < 0)
        throw InvalidInput("negative number of steps");
    BiasedCardSampler draw(p);
    std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
    std::vector<std::vector<std::uint64_t>> partial(blocks, std::vector<std::uint64_t>(slots, 0));
    parallel_for(blocks, threads, [&](std::size_t blk) {
        std::mt19937_64 rng(derive_seed(seed, blk));
        std::uint64_t begin = blk * kBlock, end = std::min(samples, begin + kBlock);
        for (std::uint64_t s = begin; s < end; ++s) {
            WalkState state(p.N());
            run_walk(state, draw, rng, t);
            ++partial[blk][per_sample(state.perm)];
        }
    });
    merged.assign(slots, 0);
    for (const auto& part : partial)
        for (std::size_t k = 0; k < slots; ++k)
            merged[k] += part[k];
}

}  // namespace

Perm sample_walk(const ShuffleParams& p, long long t, std::uint64_t seed)
{
    if (t < 0)
        throw InvalidInput("negative number of steps");
    BiasedCardSampler draw(p);
    std::mt19937_64 rng(seed);
    WalkState state(p.N());
    run_walk(state, draw, rng, t);
    return state.perm;
}

int count_fixed_points(const Perm& perm)
{
    int c = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] == static_cast<int>(i))
            ++c;
    return c;
}

std::vector<std::uint64_t> fixed_point_histogram(const ShuffleParams& p, long long t, std::uint64_t samples,
                                                 std::uint64_t seed, unsigned threads)
{
    std::vector<std::uint64_t> hist;
    sample_blocks(
        p, t, samples, seed, threads, [](const Perm& perm) { return static_cast<std::size_t>(count_fixed_points(perm)); },
        static_cast<std::size_t>(p.N()) + 1, hist);
    return hist;
}

GroupDistribution empirical_distribution(const ShuffleParams& p, long long t, std::uint64_t samples,
                                         std::uint64_t seed, unsigned threads)
{
    if (p.N() > kExactMaxN)
        throw ResourceLimit("deck too large for a dense empirical distribution");
    std::size_t states = static_cast<std::size_t>(to_double(factorial(p.N())));
    std::vector<std::uint64_t> counts;
    sample_blocks(
        p, t, samples, seed, threads, [](const Perm& perm) { return static_cast<std::size_t>(lehmer_rank(perm)); },
        states, counts);
    GroupDistribution d;
    d.n_cards = p.N();
    d.probs.resize(states);
    for (std::size_t x = 0; x < states; ++x)
        d.probs[x] = static_cast<double>(counts[x]) / static_cast<double>(samples);
    return d;
}

std::vector<double> numeric_spectrum_oracle(const ShuffleParams& p)
{
    if (p.N() > kOracleMaxN)
        throw ResourceLimit("deck too large for the dense eigensolver");
    StepMeasure m = step_measure(p);
    int n = p.N();
    std::size_t states = static_cast<std::size_t>(to_double(factorial(n)));
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(states), static_cast<Eigen::Index>(states));
    double id = to_double(m.id_mass);
    for (std::size_t x = 0; x < states; ++x)
        mat(x, x) += id;
    for (const auto& [pair, w] : m.weights) {
        double wd = to_double(w);
        auto table = left_action_table(n, pair.first, pair.second);
        for (std::size_t x = 0; x < states; ++x)
            mat(x, table[x]) += wd;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat, Eigen::EigenvaluesOnly);
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + states);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

}  // namespace brt
