#pragma once

#include "brt/spectrum.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace brt {

// Cutoff time (1/2b) N log N and the window time (N/2b)(log N - c).
double cutoff_time(int N, const Rational& b);
double window_time(int N, const Rational& b, double c);
long long window_steps(int N, const Rational& b, double c);

// Sum over LR triples of c f_lambda f_mu f_nu |Eig|^{2t}.
double omega(const Partition& lambda, double t, const ShuffleParams& p);
double log_omega(const Partition& lambda, double t, const ShuffleParams& p);
Rational omega_exact(const Partition& lambda, int t, const ShuffleParams& p);

// Precomputed nontrivial spectrum for evaluating the l2 bound at many times.
class L2Curve {
public:
    explicit L2Curve(const ShuffleParams& p, unsigned threads = 0);
    double at(double t) const;
    double log_sum(double t) const;

private:
    std::vector<double> log_mult_, log_eig_;
};

double l2_upper_bound(double t, const ShuffleParams& p, unsigned threads = 0);

enum class Zone {
    Trivial,
    RedI,
    RedII,
    RedIII,
    RedIV,
    BlueIPlus,
    BlueIMinus,
    BlueIIPlus,
    BlueIIMinus,
    YellowPlus,
    YellowMinus
};

std::string zone_name(Zone z);
double a_star(double b);
// All labels whose closed region contains lambda, in enum order.
std::vector<Zone> classify_zone(const Partition& lambda, const ShuffleParams& p, double eps = 0.01);
// Single label by priority Yellow > Blue > Red.
Zone assign_zone(const Partition& lambda, const ShuffleParams& p, double eps = 0.01);

double phi1(double x, double b);
double phi1_prime(double x, double b);
double phi2(double x, double b);
double phi3(double x, double b);
double phi4(double x, double b);

double QR(double x, double y, double b);
double QB(double x, double y, double b);
double PB(double x, double y, double b);
double LB(double b);
double TB(double x, double b);
double scrTB(double x, double b);

constexpr long long kSequenceGuard = 1000000;
std::vector<double> red_zone_sequence(double b);
std::vector<double> blue_zone_sequence(double b);

struct KConstants {
    double K11, K12, K13, K22, K23, K33;
    std::array<double, 6> values() const { return {K11, K12, K13, K22, K23, K33}; }
};
KConstants kij_constants(double b);

struct BoxMax {
    double value, x, y;
};
// Grid of the given step, then repeated local zoom around the best point.
BoxMax maximize_on_box(const std::function<double(double, double)>& f, double x0, double x1, double y0, double y1,
                       double step = 1e-3);

struct MaximumCheck {
    std::string name;
    double maximum;
    double target;
    bool holds;  // maximum <= target + tol
};
// eps <= 0 selects admissible_epsilon(b)
std::vector<MaximumCheck> function_maxima(double b, double eps = 0.0, double tol = 1e-6);

struct EpsilonValidity {
    bool blue_i;          // ab eps < 7 b^2 / 16
    bool blue_ii_slope;   // P_B decreasing in y up to x = a* + eps
    bool blue_sequence;   // blue sequence passes a* - 1 + eps
};
EpsilonValidity epsilon_validity(double b, double eps);
// largest 0.01 * 2^-k passing every epsilon_validity check
double admissible_epsilon(double b);

// 1 - bj/n + ab j(j-1)/(2n^2), for 1 <= j < n/a.
Rational main_term_envelope(int j, const ShuffleParams& p);

struct EnvelopeSlack {
    double max_slack;   // max over lambda of (max |Eig| - Q_R envelope)
    int partitions;     // lambda checked
};
// Over lambda |- 2n with 0.5n <= lambda_1, lambda_1* <= n.
EnvelopeSlack qr_envelope_slack(const ShuffleParams& p, unsigned threads = 0);

}  // namespace brt
