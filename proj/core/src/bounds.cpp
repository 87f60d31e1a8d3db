#include "brt/bounds.hpp"

#include "brt/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace brt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& v)
{
    double m = kNegInf;
    for (double x : v)
        m = std::max(m, x);
    if (m == kNegInf)
        return kNegInf;
    double s = 0.0;
    for (double x : v)
        s += std::exp(x - m);
    return m + std::log(s);
}

void require_balanced(const ShuffleParams& p, const char* what)
{
    if (!p.balanced())
        throw InvalidInput(std::string(what) + " requires a balanced split");
}

// log(mult), log|eig| for each LR triple of lambda.
void triple_logs(const Partition& lambda, const ShuffleParams& p, std::vector<double>& lm, std::vector<double>& le)
{
    double lf = log_big(count_syt(lambda));
    for (const LRTerm& term : lr_support(lambda, p.nA(), p.nB())) {
        Rational e = eigenvalue(p, lambda, term.mu, term.nu);
        lm.push_back(lf + log_big(term.c) + log_big(count_syt(term.mu)) + log_big(count_syt(term.nu)));
        le.push_back(e == 0 ? kNegInf : std::log(std::abs(to_double(e))));
    }
}

double power_term(double log_mult, double log_eig, double t)
{
    if (t == 0)
        return log_mult;
    if (log_eig == kNegInf)
        return kNegInf;
    return log_mult + 2.0 * t * log_eig;
}

void check_omega_args(const Partition& lambda, const ShuffleParams& p)
{
    require_balanced(p, "omega");
    if (lambda.size() != p.N())
        throw InvalidInput("omega: |lambda| must equal N");
    if (lambda == Partition::row(p.N()))
        throw InvalidInput("omega is defined for nontrivial lambda");
}

}  // namespace

double cutoff_time(int N, const Rational& b)
{
    return static_cast<double>(N) * std::log(static_cast<double>(N)) / (2.0 * to_double(b));
}

double window_time(int N, const Rational& b, double c)
{
    return static_cast<double>(N) / (2.0 * to_double(b)) * (std::log(static_cast<double>(N)) - c);
}

long long window_steps(int N, const Rational& b, double c)
{
    double t = window_time(N, b, c);
    if (t < 0)
        throw InvalidInput("window time is negative for this c");
    return std::llround(t);
}

double log_omega(const Partition& lambda, double t, const ShuffleParams& p)
{
    check_omega_args(lambda, p);
    std::vector<double> lm, le, terms;
    triple_logs(lambda, p, lm, le);
    for (std::size_t i = 0; i < lm.size(); ++i)
        terms.push_back(power_term(lm[i], le[i], t));
    return log_sum_exp(terms);
}

double omega(const Partition& lambda, double t, const ShuffleParams& p)
{
    return std::exp(log_omega(lambda, t, p));
}

Rational omega_exact(const Partition& lambda, int t, const ShuffleParams& p)
{
    check_omega_args(lambda, p);
    if (t < 0)
        throw InvalidInput("omega_exact: negative time");
    BigInt fl = count_syt(lambda);
    Rational s = 0;
    for (const LRTerm& term : lr_support(lambda, p.nA(), p.nB())) {
        Rational e = eigenvalue(p, lambda, term.mu, term.nu);
        Rational e2 = e * e, pw = 1;
        for (int k = 0; k < t; ++k)
            pw *= e2;
        s += Rational(term.c * fl * count_syt(term.mu) * count_syt(term.nu)) * pw;
    }
    return s;
}

L2Curve::L2Curve(const ShuffleParams& p, unsigned threads)
{
    require_balanced(p, "the l2 bound");
    if (p.N() > kSpectrumMaxN)
        throw ResourceLimit("l2 bound: deck size above the enumeration guard");
    std::vector<Partition> lambdas = enumerate_partitions(p.N());
    std::vector<std::vector<double>> lm(lambdas.size()), le(lambdas.size());
    Partition trivial = Partition::row(p.N());
    parallel_for(lambdas.size(), threads, [&](std::size_t i) {
        if (lambdas[i] != trivial)
            triple_logs(lambdas[i], p, lm[i], le[i]);
    });
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        log_mult_.insert(log_mult_.end(), lm[i].begin(), lm[i].end());
        log_eig_.insert(log_eig_.end(), le[i].begin(), le[i].end());
    }
}

double L2Curve::log_sum(double t) const
{
    std::vector<double> terms(log_mult_.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        terms[i] = power_term(log_mult_[i], log_eig_[i], t);
    return log_sum_exp(terms);
}

double L2Curve::at(double t) const
{
    if (t < 0)
        throw InvalidInput("l2 bound: negative time");
    double ls = log_sum(t);
    return ls == kNegInf ? 0.0 : 0.5 * std::exp(0.5 * ls);
}

double l2_upper_bound(double t, const ShuffleParams& p, unsigned threads)
{
    return L2Curve(p, threads).at(t);
}

std::string zone_name(Zone z)
{
    switch (z) {
    case Zone::Trivial: return "Trivial";
    case Zone::RedI: return "RedI";
    case Zone::RedII: return "RedII";
    case Zone::RedIII: return "RedIII";
    case Zone::RedIV: return "RedIV";
    case Zone::BlueIPlus: return "BlueI+";
    case Zone::BlueIMinus: return "BlueI-";
    case Zone::BlueIIPlus: return "BlueII+";
    case Zone::BlueIIMinus: return "BlueII-";
    case Zone::YellowPlus: return "Yellow+";
    case Zone::YellowMinus: return "Yellow-";
    }
    return "?";
}

double a_star(double b)
{
    return 2.0 - 1.0 / (2.0 - b);
}

std::vector<Zone> classify_zone(const Partition& lambda, const ShuffleParams& p, double eps)
{
    require_balanced(p, "classify_zone");
    int n = p.nA();
    if (lambda.size() != 2 * n)
        throw InvalidInput("classify_zone: |lambda| must equal 2n");
    if (lambda == Partition::row(2 * n))
        return {Zone::Trivial};
    long long l1 = lambda.first(), c1 = conjugate(lambda).first();
    double top = (a_star(to_double(p.b())) + eps) * n;
    // Tenth-multiples of n compared exactly in integers.
    auto le_tenths = [n](long long v, int tenths) { return 10 * v <= static_cast<long long>(tenths) * n; };
    auto ge_tenths = [n](long long v, int tenths) { return 10 * v >= static_cast<long long>(tenths) * n; };
    std::vector<Zone> out;
    if (l1 <= n && c1 <= n) {
        if (le_tenths(l1, 7) && le_tenths(c1, 7))
            out.push_back(Zone::RedI);
        if ((ge_tenths(l1, 7) && le_tenths(c1, 5)) || (ge_tenths(c1, 7) && le_tenths(l1, 5)))
            out.push_back(Zone::RedII);
        bool iii_plus = ge_tenths(l1, 7) && ge_tenths(c1, 5) && le_tenths(c1, 7);
        bool iii_minus = ge_tenths(c1, 7) && ge_tenths(l1, 5) && le_tenths(l1, 7);
        if (iii_plus || iii_minus)
            out.push_back(Zone::RedIII);
        if (ge_tenths(l1, 7) && ge_tenths(c1, 7))
            out.push_back(Zone::RedIV);
    }
    auto blue = [&](long long major, long long minor, Zone one, Zone two) {
        if (major >= n && static_cast<double>(major) <= top && minor <= n) {
            if (ge_tenths(minor, 5))
                out.push_back(one);
            if (le_tenths(minor, 5))
                out.push_back(two);
        }
    };
    blue(l1, c1, Zone::BlueIPlus, Zone::BlueIIPlus);
    blue(c1, l1, Zone::BlueIMinus, Zone::BlueIIMinus);
    if (static_cast<double>(l1) >= top)
        out.push_back(Zone::YellowPlus);
    if (static_cast<double>(c1) >= top)
        out.push_back(Zone::YellowMinus);
    std::sort(out.begin(), out.end());
    return out;
}

Zone assign_zone(const Partition& lambda, const ShuffleParams& p, double eps)
{
    std::vector<Zone> labels = classify_zone(lambda, p, eps);
    if (labels.empty())
        throw std::logic_error("partition outside every zone: " + to_string(lambda));
    auto has = [&](Zone z) { return std::find(labels.begin(), labels.end(), z) != labels.end(); };
    for (Zone z : {Zone::Trivial, Zone::YellowPlus, Zone::YellowMinus, Zone::BlueIPlus, Zone::BlueIMinus,
                   Zone::BlueIIPlus, Zone::BlueIIMinus, Zone::RedI, Zone::RedII, Zone::RedIII, Zone::RedIV})
        if (has(z))
            return z;
    return labels.front();
}

double phi1(double x, double b)
{
    double a = 2.0 - b;
    double u = a * b - b * b - a * b * x;
    return u * u / (16.0 * a * b) + (a * a - a * b) / 2.0 * x * x + (2.0 * a * b - a * a) / 2.0 * x
        + (a * a - a * b) / 4.0;
}

double phi1_prime(double x, double b)
{
    double a = 2.0 - b;
    return (a * a - 7.0 * a * b / 8.0) * x + (7.0 * a * b - 4.0 * a * a + b * b) / 8.0;
}

double phi2(double x, double b)
{
    double v = phi1(x, b);
    if (v <= 0)
        throw InvalidInput("phi2: phi1 is not positive here");
    return 2.0 + 2.0 / b * std::log(v);
}

double phi3(double x, double b)
{
    if (x <= phi2(0.5, b))
        throw InvalidInput("phi3: argument below phi2(0.5)");
    double lo = 0.5, hi = 1.0;
    int grow = 0;
    while (phi2(hi, b) < x) {
        lo = hi;
        hi *= 2.0;
        if (++grow > 200)
            throw InvalidInput("phi3: argument out of range");
    }
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        if (phi2(mid, b) < x)
            lo = mid;
        else
            hi = mid;
    }
    return std::abs(phi2(lo, b) - x) <= std::abs(phi2(hi, b) - x) ? lo : hi;
}

double phi4(double x, double b)
{
    return 0.5 * (phi3(x, b) + x);
}

double QR(double x, double y, double b)
{
    double a = 2.0 - b;
    return (a * a - b * b) / 4.0 + (a * a - a * b) / 2.0 * (x * x - x) + (a * b - b * b) / 2.0 * (y * y - y)
        + a * b / 2.0 * (x - x * y / 2.0 - y * y / 2.0);
}

double QB(double x, double y, double b)
{
    double a = 2.0 - b;
    return (a * a - b * b) / 4.0 + a * b / 2.0 * (x - x * y / 2.0 - y * y / 2.0) + (a * b - b * b) / 2.0 * (y * y - y);
}

double PB(double x, double y, double b)
{
    double a = 2.0 - b;
    return (a * a + 3.0 * a * b) / 4.0 + a * b / 2.0 * (x * x - 2.0 * (x + y) + x * y) + (a * b - b * b) / 4.0 * y;
}

double LB(double b)
{
    return 1.0 + 2.0 / b * std::log((2.0 - b) / 2.0);
}

double TB(double x, double b)
{
    double a = 2.0 - b;
    if (x <= LB(b))
        throw InvalidInput("TB: argument must exceed L_B");
    return std::sqrt((2.0 * std::exp(b / 2.0 * (x - 1.0)) - a) / (a * b));
}

double scrTB(double x, double b)
{
    return 0.5 * (TB(x, b) + x);
}

namespace {

void check_bias(double b)
{
    if (!(b > 0 && b <= 1))
        throw InvalidInput("bias must lie in (0, 1]");
}

}  // namespace

std::vector<double> red_zone_sequence(double b)
{
    check_bias(b);
    std::vector<double> seq{0.7};
    while (seq.back() <= 1.0) {
        if (static_cast<long long>(seq.size()) > kSequenceGuard)
            throw ResourceLimit("red zone sequence did not terminate");
        seq.push_back(phi4(seq.back(), b));
    }
    return seq;
}

std::vector<double> blue_zone_sequence(double b)
{
    check_bias(b);
    double stop = a_star(b) - 1.0;
    std::vector<double> seq{0.0};
    while (seq.back() <= stop) {
        if (static_cast<long long>(seq.size()) > kSequenceGuard)
            throw ResourceLimit("blue zone sequence did not terminate");
        seq.push_back(scrTB(seq.back(), b));
    }
    return seq;
}

KConstants kij_constants(double b)
{
    check_bias(b);
    double a = 2.0 - b, s = 2.0 / b;
    KConstants k{};
    k.K11 = 2.0 + s * std::log(1.0 / 3.0);
    k.K12 = 5.0 / 3.0 + s * std::log(a * a / 8.0 + b * b / 12.0 + a * b / 6.0);
    k.K13 = 1.5 + s * std::log(0.58 * a * a / 4.0 + b * b / 12.0 + a * b / 6.0);
    k.K22 = 4.0 / 3.0 + s * std::log(0.5);
    k.K23 = 7.0 / 6.0 + s * std::log(0.58 * a * a / 4.0 + b * b / 8.0 + a * b / 4.0);
    k.K33 = 1.0 + s * std::log(0.58);
    return k;
}

BoxMax maximize_on_box(const std::function<double(double, double)>& f, double x0, double x1, double y0, double y1,
                       double step)
{
    if (x1 < x0 || y1 < y0)
        throw InvalidInput("maximize_on_box: empty box");
    long long nx = std::max<long long>(1, std::llround((x1 - x0) / step));
    long long ny = std::max<long long>(1, std::llround((y1 - y0) / step));
    BoxMax best{-std::numeric_limits<double>::infinity(), x0, y0};
    for (long long i = 0; i <= nx; ++i) {
        double x = x0 + (x1 - x0) * static_cast<double>(i) / static_cast<double>(nx);
        for (long long j = 0; j <= ny; ++j) {
            double y = y0 + (y1 - y0) * static_cast<double>(j) / static_cast<double>(ny);
            double v = f(x, y);
            if (v > best.value)
                best = {v, x, y};
        }
    }
    double hx = (x1 - x0) / static_cast<double>(nx), hy = (y1 - y0) / static_cast<double>(ny);
    for (int round = 0; round < 40; ++round) {
        double lx = std::max(x0, best.x - hx), ux = std::min(x1, best.x + hx);
        double ly = std::max(y0, best.y - hy), uy = std::min(y1, best.y + hy);
        BoxMax local = best;
        for (int i = 0; i <= 10; ++i) {
            double x = lx + (ux - lx) * i / 10.0;
            for (int j = 0; j <= 10; ++j) {
                double y = ly + (uy - ly) * j / 10.0;
                double v = f(x, y);
                if (v > local.value)
                    local = {v, x, y};
            }
        }
        best = local;
        hx /= 4.0;
        hy /= 4.0;
    }
    return best;
}

std::vector<MaximumCheck> function_maxima(double b, double eps, double tol)
{
    check_bias(b);
    if (eps <= 0)
        eps = admissible_epsilon(b);
    double a = 2.0 - b, as = a_star(b);
    auto qr = [b](double x, double y) { return QR(x, y, b); };
    auto qb = [b](double x, double y) { return QB(x, y, b); };
    auto pb = [b](double x, double y) { return PB(x, y, b); };
    std::vector<MaximumCheck> out;
    auto add = [&](std::string name, double m, double target) {
        out.push_back({std::move(name), m, target, m <= target + tol});
    };
    double m3 = std::max(maximize_on_box(qr, 0.7, 1.0, 0.5, 0.7).value, maximize_on_box(qr, 0.5, 0.7, 0.7, 1.0).value);
    add("QR_zone_III", m3, a * a / 4.0 + 3.0 * a * b / 16.0 - b * b / 8.0);
    add("QR_zone_IV", maximize_on_box(qr, 0.7, 1.0, 0.7, 1.0).value, 0.25 * a * a + 0.0975 * a * b - 0.145 * b * b);
    add("QB_blue_I", maximize_on_box(qb, 1.0, as, 0.5, 1.0).value, 1.0 - b / 4.0 - 7.0 * b * b / 16.0);
    double beta = as - 1.0 + eps;
    add("PB_blue_II", maximize_on_box(pb, 1.0, 1.0 + beta, 0.0, 0.5).value, a * b / 2.0 * beta * beta + a / 2.0);
    return out;
}

EpsilonValidity epsilon_validity(double b, double eps)
{
    check_bias(b);
    double a = 2.0 - b, as = a_star(b);
    EpsilonValidity v{};
    v.blue_i = a * b * eps < 7.0 * b * b / 16.0;
    v.blue_ii_slope = a * b / 2.0 * (as + eps) - (3.0 * a * b + b * b) / 4.0 < 0;
    v.blue_sequence = blue_zone_sequence(b).back() >= as - 1.0 + eps;
    return v;
}

double admissible_epsilon(double b)
{
    double eps = 0.01;
    for (int k = 0; k < 60; ++k, eps /= 2) {
        EpsilonValidity v = epsilon_validity(b, eps);
        if (v.blue_i && v.blue_ii_slope && v.blue_sequence)
            return eps;
    }
    throw ResourceLimit("no admissible epsilon for b = " + std::to_string(b));
}

Rational main_term_envelope(int j, const ShuffleParams& p)
{
    require_balanced(p, "main_term_envelope");
    int n = p.nA();
    Rational a = p.a(), b = p.b();
    if (j < 1 || !(a * j < n))
        throw InvalidInput("main_term_envelope needs 1 <= j < n/a");
    Rational nn(n);
    return 1 - b * j / nn + a * b * j * (j - 1) / (2 * nn * nn);
}

EnvelopeSlack qr_envelope_slack(const ShuffleParams& p, unsigned threads)
{
    require_balanced(p, "qr_envelope_slack");
    int n = p.nA();
    double b = to_double(p.b());
    std::vector<Partition> chosen;
    for (const Partition& lambda : enumerate_partitions(2 * n)) {
        int l1 = lambda.first(), c1 = conjugate(lambda).first();
        if (2 * l1 >= n && 2 * c1 >= n && l1 <= n && c1 <= n)
            chosen.push_back(lambda);
    }
    std::vector<double> slack(chosen.size(), -std::numeric_limits<double>::infinity());
    parallel_for(chosen.size(), threads, [&](std::size_t i) {
        const Partition& lambda = chosen[i];
        double x = static_cast<double>(lambda.first()) / n;
        double y = static_cast<double>(conjugate(lambda).first()) / n;
        double env = std::max(QR(x, y, b), QR(y, x, b));
        double m = 0;
        for (const LRTerm& term : lr_support(lambda, n, n))
            m = std::max(m, std::abs(to_double(eigenvalue(p, lambda, term.mu, term.nu))));
        slack[i] = m - env;
    });
    EnvelopeSlack out{-std::numeric_limits<double>::infinity(), static_cast<int>(chosen.size())};
    for (double s : slack)
        out.max_slack = std::max(out.max_slack, s);
    return out;
}

}  // namespace brt
