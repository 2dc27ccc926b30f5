#include "srb/specfun.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <stdexcept>

namespace srb {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
constexpr double kLogHalf = -0.69314718055994530942;
// Below this argument Phi is evaluated through erfcx; plain erfc would still
// be representable down to ~-37 but the products needed downstream are not.
constexpr double kScaledBranch = -8.0;
} // namespace

LogWeighted LogWeighted::from_value(double v) {
    if (v == 0.0) return {};
    return {std::log(std::abs(v)), v > 0 ? +1 : -1};
}

LogWeighted log_weighted_sub(const LogWeighted& a, const LogWeighted& b) {
    if (b.sign == 0) return a;
    if (a.sign == 0) return {b.log_mag, -b.sign};
    if (a.sign != b.sign) {
        // Same-sign magnitudes add.
        double hi = std::max(a.log_mag, b.log_mag);
        double s = std::exp(a.log_mag - hi) + std::exp(b.log_mag - hi);
        return {hi + std::log(s), a.sign};
    }
    // Same sign: true cancellation path via expm1.
    if (a.log_mag >= b.log_mag) {
        double d = -std::expm1(b.log_mag - a.log_mag); // in [0,1]
        if (d == 0.0) return {};
        return {a.log_mag + std::log(d), a.sign};
    }
    double d = -std::expm1(a.log_mag - b.log_mag);
    return {b.log_mag + std::log(d), -a.sign};
}

double std_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / kSqrt2);
}

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) * 0.3989422804014326779;
}

double erfcx_large(double u) {
    // Laplace continued fraction for erfc, modified Lentz recursion:
    //   sqrt(pi) e^{u^2} erfc(u) = 1/(u+ 1/2/(u+ 1/(u+ 3/2/(u+ ...))))
    // Converges to machine precision in < 40 terms for u >= 4.
    const double tiny = 1e-300;
    double f = u > tiny ? u : tiny;
    double C = f;
    double D = 0.0;
    for (int k = 1; k < 200; ++k) {
        double ak = 0.5 * k;
        D = u + ak * D;
        if (std::abs(D) < tiny) D = tiny;
        C = u + ak / C;
        if (std::abs(C) < tiny) C = tiny;
        D = 1.0 / D;
        double delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return 1.0 / (f * 1.7724538509055160273); // 1/(f sqrt(pi))
}

double log_std_normal_cdf(double x) {
    if (x >= 0.0) {
        // log(1 - Phi(-x)) without losing the tiny complement.
        return std::log1p(-std_normal_cdf(-x));
    }
    if (x > kScaledBranch) {
        return std::log(std_normal_cdf(x));
    }
    const double u = -x / kSqrt2;
    return -0.5 * x * x + std::log(erfcx_large(u)) + kLogHalf;
}

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("std_normal_quantile: p must lie in (0,1)");
    if (p < 0.5) return -kSqrt2 * boost::math::erfc_inv(2.0 * p);
    return kSqrt2 * boost::math::erfc_inv(2.0 * (1.0 - p));
}

LogWeighted scaled_cdf_product(double log_scale, double x) {
    return LogWeighted::from_log(log_scale + log_std_normal_cdf(x));
}

double bessel_k_half_integer_scaled(int n, double z) {
    if (n < 0) throw std::invalid_argument("bessel_k_half_integer: order index must be >= 0");
    if (!(z > 0.0)) throw std::invalid_argument("bessel_k_half_integer: argument must be > 0");
    // Hankel symbol sum: sum_{j=0..n} (n+j)!/(j!(n-j)!) (2z)^{-j}, built by
    // the term recurrence t_{j+1} = t_j (n-j)(n+j+1)/((j+1) 2z).
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= static_cast<double>(n - j) * static_cast<double>(n + j + 1) /
                (2.0 * z * static_cast<double>(j + 1));
        sum += term;
    }
    return std::sqrt(M_PI / (2.0 * z)) * sum;
}

double bessel_k_half_integer(int n, double z) {
    return std::exp(-z) * bessel_k_half_integer_scaled(n, z);
}

double gamma_fn(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("gamma_fn: argument must be > 0");
    return std::tgamma(x);
}

} // namespace srb
