#include "srb/bridge.hpp"

#include "srb/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srb {

namespace {

constexpr double kLogSqrt2Pi = 0.91893853320467274178;

void check_interior(const BridgeParams& p, double t, double z) {
    validate(p);
    if (!(z > 0.0)) throw std::invalid_argument("bridge: terminal value z must be > 0");
    if (!(t > 0.0 && t < p.T)) throw std::invalid_argument("bridge: t must lie in (0,T)");
}

struct CdfTerms {
    double phi_arg1;   // c(Ty - tz)/sqrt(yz(z-y))
    double phi_arg2;   // c((2t-T)y - tz)/sqrt(yz(z-y)); always < 0
    double log_scale;  // 2 c^2 t (T-t)/z
};

CdfTerms cdf_terms(const BridgeParams& p, double t, double y, double z) {
    const double T = p.T;
    const double root = std::sqrt(y * z * (z - y));
    return {p.c * (T * y - t * z) / root,
            p.c * ((2.0 * t - T) * y - t * z) / root,
            2.0 * p.c * p.c * t * (T - t) / z};
}

} // namespace

double bridge_log_density(const BridgeParams& p, double t, double y, double z) {
    check_interior(p, t, z);
    if (y <= 0.0 || y > z) return -std::numeric_limits<double>::infinity();
    const double T = p.T;
    const double num = T * y - t * z;
    return std::log(p.c * t * (T - t) / T) - kLogSqrt2Pi -
           1.5 * std::log(y * (z - y) / z) - 0.5 * p.c * p.c * num * num / (y * z * (z - y));
}

double bridge_density(const BridgeParams& p, double t, double y, double z) {
    double lg = bridge_log_density(p, t, y, z);
    return std::isinf(lg) ? 0.0 : std::exp(lg);
}

double bridge_cdf(const BridgeParams& p, double t, double y, double z) {
    check_interior(p, t, z);
    if (y < 0.0 || y > z) throw std::invalid_argument("bridge_cdf: y must lie in [0,z]");
    if (y == 0.0) return 0.0;
    if (y == z) return 1.0;
    const CdfTerms a = cdf_terms(p, t, y, z);
    const double second = scaled_cdf_product(a.log_scale, a.phi_arg2).value();
    const double f = std_normal_cdf(a.phi_arg1) + (1.0 - 2.0 * t / p.T) * second;
    return std::clamp(f, 0.0, 1.0);
}

double bridge_incomplete_first_moment(const BridgeParams& p, double t, double y, double z) {
    check_interior(p, t, z);
    if (y < 0.0 || y > z) throw std::invalid_argument("bridge_incomplete_first_moment: y must lie in [0,z]");
    const double total = (t / p.T) * z;
    if (y == 0.0) return 0.0;
    if (y == z) return total;
    const CdfTerms a = cdf_terms(p, t, y, z);
    const LogWeighted first = LogWeighted::from_log(log_std_normal_cdf(a.phi_arg1));
    const LogWeighted second = scaled_cdf_product(a.log_scale, a.phi_arg2);
    const double m = total * log_weighted_sub(first, second).value();
    return std::clamp(m, 0.0, total);
}

double bridge_conditional_mean(const BridgeParams& p, double s, double t, double x, double z) {
    validate(p);
    if (!(0.0 <= s && s < t && t < p.T))
        throw std::invalid_argument("bridge_conditional_mean: need 0 <= s < t < T");
    if (!(0.0 <= x && x <= z)) throw std::invalid_argument("bridge_conditional_mean: need 0 <= x <= z");
    return ((p.T - t) * x + (t - s) * z) / (p.T - s);
}

double bridge_conditional_second_moment(const BridgeParams& p, double s, double t, double x,
                                        double z) {
    validate(p);
    if (!(0.0 <= s && s < t && t < p.T))
        throw std::invalid_argument("bridge_conditional_second_moment: need 0 <= s < t < T");
    if (!(0.0 <= x && x <= z)) throw std::invalid_argument("bridge_conditional_second_moment: need 0 <= x <= z");
    const double w = z - x;
    if (w == 0.0) return 0.0;
    const double Ts = p.T - s;
    const double scp =
        scaled_cdf_product(0.5 * p.c * p.c * Ts * Ts / w, -p.c * Ts / std::sqrt(w)).value();
    const double brace = 1.0 - p.c * (p.T - t) * std::sqrt(2.0 * M_PI / w) * scp;
    return ((t - s) / Ts) * w * w * std::max(brace, 0.0);
}

double bridge_midpoint_sample(const BridgeParams& p, double s, double t, double y, double z_val,
                              CounterRng& rng) {
    validate(p);
    if (!(0.0 <= s && s < t && t <= p.T))
        throw std::invalid_argument("bridge_midpoint_sample: need 0 <= s < t <= T");
    if (y > z_val) throw std::invalid_argument("bridge_midpoint_sample: endpoints must be nondecreasing");
    const double d = z_val - y;
    if (d == 0.0) return y;
    const double zn = rng.normal();
    const double cd = p.c * (t - s);
    const double frac = 0.5 * (1.0 + zn / std::sqrt(cd * cd / d + zn * zn));
    return y + d * frac;
}

} // namespace srb
