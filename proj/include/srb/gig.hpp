#pragma once

#include <vector>

namespace srb {

/// Closed forms for the GIG(lambda = n - 1/2) terminal family: the paid
/// claims process is then a mixture of inverse-Gaussian laws and the best
/// estimate is a rational function of the current paid amount.

/// Inverse-Gaussian increment density q_t(x) (the lambda = -1/2 case).
double ig_increment_density(double c, double gamma, double t, double x);

/// k-th moment m_t^{(k)} of q_t; m_t^{(0)} = 1.
double ig_moment(double c, double gamma, double t, int k);

/// Same with gamma replaced by sqrt(gamma^2 - a^2) (exponential-moment path).
double ig_moment_tilted(double c, double gamma_bar, double t, int k);

/// Mixture weights w^{(k)}_{st}(x), k = 0..n; they sum to one.
std::vector<double> mixture_weights(double c, double gamma, int n, double T, double s, double t,
                                    double x);

/// Best-estimate ultimate loss as a rational function of xi.
double closed_best_estimate(double c, double gamma, int n, double t, double xi, double T);

/// E[U^m | xi_t] for integer m >= 1.
double closed_higher_moment(double c, double gamma, int n, double t, double xi, double T, int m);

/// E[exp(a^2 U / 2) | xi_t] for 0 < a < gamma.
double closed_exponential_moment(double c, double gamma, int n, double t, double xi, double T,
                                 double a);

/// IG-process transition q_{t-s}(y-x); equals the generic random-bridge
/// transition for the GIG(-1/2, cT, gamma) prior.
double ig_process_transition(double c, double gamma, double s, double t, double x, double y);

} // namespace srb
