#include "srb/gig.hpp"

#include "srb/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace srb {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr int kMaxOrder = 12; // binomial-moment growth outruns doubles beyond this

void check_order(int n) {
    if (n < 1) throw std::invalid_argument("gig closed forms: n must be >= 1 (n = 0 is the plain IG process)");
    if (n > kMaxOrder) throw std::invalid_argument("gig closed forms: n exceeds the supported order");
}

double binom(int n, int k) {
    double r = 1.0;
    for (int j = 1; j <= k; ++j) r *= static_cast<double>(n - k + j) / j;
    return r;
}

// Nested evaluation of sum_{k=0..n} C(n,k) m^{(n-k)}_tau x^k.
double moment_poly(double c, double gamma, double tau, int n, double x) {
    double acc = 0.0;
    for (int k = n; k >= 0; --k) {
        acc = acc * x + binom(n, k) * ig_moment(c, gamma, tau, n - k);
    }
    return acc;
}

double moment_poly_tilted(double c, double gamma_bar, double tau, int n, double x) {
    double acc = 0.0;
    for (int k = n; k >= 0; --k) {
        acc = acc * x + binom(n, k) * ig_moment_tilted(c, gamma_bar, tau, n - k);
    }
    return acc;
}

} // namespace

double ig_increment_density(double c, double gamma, double t, double x) {
    if (!(gamma > 0.0)) throw std::invalid_argument("ig_increment_density: gamma must be > 0");
    if (!(t > 0.0)) throw std::invalid_argument("ig_increment_density: t must be > 0");
    if (x <= 0.0) return 0.0;
    const double ct = c * t;
    const double dev = x - ct / gamma;
    return std::exp(std::log(ct) - kLogSqrt2Pi - 1.5 * std::log(x) -
                    0.5 * gamma * gamma * dev * dev / x);
}

double ig_moment(double c, double gamma, double t, int k) {
    if (k < 0) throw std::invalid_argument("ig_moment: k must be >= 0");
    if (k == 0) return 1.0;
    // m^{(k)} = sqrt(2/pi) gamma e^{gct} (ct/g)^{k+1/2} K_{k-1/2}[gct]; the
    // e^{gct} cancels against the scaled Bessel sum, leaving
    // (ct/g)^k * hankel_sum(k-1, gct).
    const double w = gamma * c * t;
    const double scaled = bessel_k_half_integer_scaled(k - 1, w); // e^w K_{k-1/2}(w)
    return std::pow(c * t / gamma, k) * scaled / std::sqrt(M_PI / (2.0 * w));
}

double ig_moment_tilted(double c, double gamma_bar, double t, int k) {
    return ig_moment(c, gamma_bar, t, k);
}

std::vector<double> mixture_weights(double c, double gamma, int n, double T, double s, double t,
                                    double x) {
    check_order(n);
    if (!(0.0 <= s && s < t && t < T))
        throw std::invalid_argument("mixture_weights: need 0 <= s < t < T");
    if (!(x >= 0.0)) throw std::invalid_argument("mixture_weights: x must be >= 0");
    const double den = moment_poly(c, gamma, T - s, n, x);
    std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        const double inner = moment_poly(c, gamma, T - t, k, x);
        w[static_cast<std::size_t>(k)] =
            binom(n, k) * ig_moment(c, gamma, t - s, n - k) * inner / den;
    }
    return w;
}

double closed_best_estimate(double c, double gamma, int n, double t, double xi, double T) {
    check_order(n);
    if (!(t < T)) throw std::invalid_argument("closed_best_estimate: t must be < T");
    const double tau = T - t;
    return moment_poly(c, gamma, tau, n + 1, xi) / moment_poly(c, gamma, tau, n, xi);
}

double closed_higher_moment(double c, double gamma, int n, double t, double xi, double T, int m) {
    check_order(n);
    if (m < 1) throw std::invalid_argument("closed_higher_moment: m must be >= 1");
    if (!(t < T)) throw std::invalid_argument("closed_higher_moment: t must be < T");
    const double tau = T - t;
    return moment_poly(c, gamma, tau, n + m, xi) / moment_poly(c, gamma, tau, n, xi);
}

double closed_exponential_moment(double c, double gamma, int n, double t, double xi, double T,
                                 double a) {
    check_order(n);
    if (!(a > 0.0 && a < gamma))
        throw std::invalid_argument("closed_exponential_moment: need 0 < a < gamma");
    if (!(t < T)) throw std::invalid_argument("closed_exponential_moment: t must be < T");
    const double tau = T - t;
    const double gbar = std::sqrt((gamma - a) * (gamma + a));
    const double ratio =
        moment_poly_tilted(c, gbar, tau, n, xi) / moment_poly(c, gamma, tau, n, xi);
    // Exponent c*tau*(gamma - gbar) is positive: the tilt removes part of the
    // exponential decay. (Verified against quadrature; see the tests.)
    return ratio * std::exp(0.5 * a * a * xi + c * tau * (gamma - gbar));
}

double ig_process_transition(double c, double gamma, double s, double t, double x, double y) {
    if (!(s < t)) throw std::invalid_argument("ig_process_transition: need s < t");
    if (y < x) throw std::invalid_argument("ig_process_transition: increments are nonnegative");
    return ig_increment_density(c, gamma, t - s, y - x);
}

} // namespace srb
