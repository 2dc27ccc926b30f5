#pragma once

#include "srb/rng.hpp"

namespace srb {

/// Stable-1/2 subordinator configuration: activity parameter c and run-off
/// horizon T.
struct BridgeParams {
    double c;
    double T;
};

void validate(const BridgeParams& p);

/// Density f_t(x) = 1{x>0} ct/(sqrt(2 pi) x^{3/2}) exp(-c^2 t^2/(2x)).
double subordinator_density(const BridgeParams& p, double t, double x);

/// log f_t(x); -inf outside the support.
double subordinator_log_density(const BridgeParams& p, double t, double x);

/// Distribution function 2 Phi[-c t x^{-1/2}].
double subordinator_cdf(const BridgeParams& p, double t, double x);

/// Exact inverse of the distribution function: x = (ct / Phi^{-1}(1-p/2))^2.
double subordinator_quantile(const BridgeParams& p, double t, double prob);

/// Exact increment draw (c dt / Z)^2 for Z standard normal.
double sample_increment(const BridgeParams& p, double dt, CounterRng& rng);

/// Laplace transform exp(-c t sqrt(2 lambda)), consistent with the density
/// above (anchored on the density; see the quadrature audit in the tests).
double laplace_transform(const BridgeParams& p, double t, double lambda);

} // namespace srb
