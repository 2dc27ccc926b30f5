#pragma once

#include <cmath>
#include <limits>

namespace srb {

/// A real number carried as (sign, log|x|) so that products of enormous
/// exponentials with tiny normal tails never overflow. sign == 0 iff the
/// value is exactly zero.
struct LogWeighted {
    double log_mag = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static LogWeighted from_log(double lm, int s = +1) { return {lm, lm == lm ? s : 0}; }
    static LogWeighted from_value(double v);

    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
    bool is_zero() const { return sign == 0; }

    LogWeighted& operator*=(const LogWeighted& o) {
        sign *= o.sign;
        log_mag = sign == 0 ? -std::numeric_limits<double>::infinity() : log_mag + o.log_mag;
        return *this;
    }
    friend LogWeighted operator*(LogWeighted a, const LogWeighted& b) { return a *= b; }

    /// Multiply by e^{log_factor}.
    LogWeighted scaled(double log_factor) const {
        return sign == 0 ? LogWeighted{} : LogWeighted{log_mag + log_factor, sign};
    }
};

/// a - b in log space; accurate when the two magnitudes are far apart,
/// absolute-accurate when they nearly cancel.
LogWeighted log_weighted_sub(const LogWeighted& a, const LogWeighted& b);

/// Standard normal distribution function Phi[x].
double std_normal_cdf(double x);

/// log Phi[x], finite for all finite x (asymptotic branch below -8).
double log_std_normal_cdf(double x);

/// Phi^{-1}(p) for p in (0,1).
double std_normal_quantile(double p);

/// Standard normal density.
double std_normal_pdf(double x);

/// e^{log_scale} * Phi[x] evaluated in log space. For x <= -8 the product is
/// computed through the scaled complementary error function, so it stays
/// accurate in the cancellation regime log_scale ~ x^2/2.
LogWeighted scaled_cdf_product(double log_scale, double x);

/// Scaled complementary error function e^{u^2} erfc(u) for u >= 4
/// (continued-fraction evaluation).
double erfcx_large(double u);

/// Modified Bessel function K_{n+1/2}[z] via the finite Hankel-symbol sum.
double bessel_k_half_integer(int n, double z);

/// e^{z} K_{n+1/2}[z]; the exponential factor is never formed.
double bessel_k_half_integer_scaled(int n, double z);

/// Gamma function on the positive half-line.
double gamma_fn(double x);

} // namespace srb
