#include "brt/spectrum.hpp"

#include "brt/parallel.hpp"

#include <algorithm>
#include <ostream>

namespace brt {

ShuffleParams::ShuffleParams(int nA, int nB, Rational b) : nA_(nA), nB_(nB), b_(std::move(b))
{
    if (nA < 1 || nB < 1)
        throw InvalidInput("both halves of the deck need at least one card");
    if (b_ <= 0 || b_ > 1)
        throw InvalidInput("bias b must lie in (0, 1]");
}

bool ShuffleParams::stochastic() const
{
    return a() * nA_ + b_ * nB_ == N();
}

Rational eigenvalue(const ShuffleParams& p, const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (lambda.size() != p.N() || mu.size() != p.nA() || nu.size() != p.nB())
        throw InvalidInput("eigenvalue: partition sizes do not match the deck split");
    Rational a = p.a(), b = p.b();
    Rational n2 = Rational(p.N()) * p.N();
    Rational e = (a * a * p.nA() + b * b * p.nB()) / n2;
    e += 2 * (a * a - a * b) / n2 * diag_index(mu);
    e += 2 * (b * b - a * b) / n2 * diag_index(nu);
    e += 2 * a * b / n2 * diag_index(lambda);
    return e;
}

std::vector<SpectrumEntry> full_spectrum(const ShuffleParams& p, unsigned threads)
{
    if (p.N() > kSpectrumMaxN)
        throw ResourceLimit("full_spectrum: deck size above the enumeration guard");
    std::vector<Partition> lambdas = enumerate_partitions(p.N());
    std::vector<std::vector<SpectrumEntry>> per(lambdas.size());
    parallel_for(lambdas.size(), threads, [&](std::size_t i) {
        const Partition& lambda = lambdas[i];
        BigInt fl = count_syt(lambda);
        for (LRTerm& term : lr_support(lambda, p.nA(), p.nB())) {
            SpectrumEntry e;
            e.eig = eigenvalue(p, lambda, term.mu, term.nu);
            e.mult = term.c * fl * count_syt(term.mu) * count_syt(term.nu);
            e.lambda = lambda;
            e.mu = std::move(term.mu);
            e.nu = std::move(term.nu);
            per[i].push_back(std::move(e));
        }
    });
    std::vector<SpectrumEntry> out;
    for (auto& v : per)
        for (auto& e : v)
            out.push_back(std::move(e));
    return out;
}

Rational rt_eigenvalue(const Partition& mu, int n)
{
    if (mu.size() != n || n < 1)
        throw InvalidInput("rt_eigenvalue: |mu| must equal n");
    return Rational(1, n) + Rational(2 * diag_index(mu), static_cast<long long>(n) * n);
}

Rational eig_rt_envelope(const ShuffleParams& p, const Partition& mu, const Partition& nu)
{
    if (!p.balanced())
        throw InvalidInput("eig_rt_envelope requires a balanced split");
    int n = p.nA();
    if (mu.size() != n || nu.size() != n)
        throw InvalidInput("eig_rt_envelope: |mu| and |nu| must equal n");
    Rational a = p.a(), b = p.b();
    Rational dm = abs(rt_eigenvalue(mu, n));
    Rational dn = abs(rt_eigenvalue(nu, n));
    long long cross = std::max(inner_product(mu, nu), inner_product(conjugate(mu), conjugate(nu)));
    return a * a / 4 * dm + b * b / 4 * dn + a * b / 2 * Rational(cross, static_cast<long long>(n) * n);
}

void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& entries)
{
    out << "lambda;mu;nu;eig_num;eig_den;mult\n";
    for (const auto& e : entries) {
        out << to_string(e.lambda) << ';' << to_string(e.mu) << ';' << to_string(e.nu) << ';'
            << numerator(e.eig) << ';' << denominator(e.eig) << ';' << e.mult << '\n';
    }
}

}  // namespace brt
