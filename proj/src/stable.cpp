#include "srb/stable.hpp"

#include <cmath>
#include <stdexcept>

namespace srb {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178; // log sqrt(2 pi)
} // namespace

void validate(const BridgeParams& p) {
    if (!(p.c > 0.0)) throw std::invalid_argument("BridgeParams: activity parameter c must be > 0");
    if (!(p.T > 0.0)) throw std::invalid_argument("BridgeParams: horizon T must be > 0");
}

double subordinator_log_density(const BridgeParams& p, double t, double x) {
    if (!(t > 0.0)) throw std::invalid_argument("subordinator_density: t must be > 0");
    if (x <= 0.0) return -std::numeric_limits<double>::infinity();
    const double ct = p.c * t;
    return std::log(ct) - kLogSqrt2Pi - 1.5 * std::log(x) - 0.5 * ct * ct / x;
}

double subordinator_density(const BridgeParams& p, double t, double x) {
    double lg = subordinator_log_density(p, t, x);
    return std::isinf(lg) ? 0.0 : std::exp(lg);
}

double subordinator_cdf(const BridgeParams& p, double t, double x) {
    if (!(t > 0.0)) throw std::invalid_argument("subordinator_cdf: t must be > 0");
    if (x <= 0.0) return 0.0;
    return 2.0 * std_normal_cdf(-p.c * t / std::sqrt(x));
}

double subordinator_quantile(const BridgeParams& p, double t, double prob) {
    if (!(prob > 0.0 && prob < 1.0))
        throw std::invalid_argument("subordinator_quantile: p must lie in (0,1)");
    const double q = std_normal_quantile(1.0 - 0.5 * prob);
    const double r = p.c * t / q;
    return r * r;
}

double sample_increment(const BridgeParams& p, double dt, CounterRng& rng) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_increment: dt must be > 0");
    const double z = rng.normal();
    const double r = p.c * dt / z;
    return r * r;
}

double laplace_transform(const BridgeParams& p, double t, double lambda) {
    if (lambda < 0.0) throw std::invalid_argument("laplace_transform: lambda must be >= 0");
    return std::exp(-p.c * t * std::sqrt(2.0 * lambda));
}

} // namespace srb
