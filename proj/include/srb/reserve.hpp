#pragma once

#include "srb/lrb.hpp"

#include <utility>
#include <vector>

namespace srb {

struct ReservingReport {
    Observation at;
    double best_estimate_ultimate = 0.0;
    double reserve = 0.0;
    double variance = 0.0;
    std::vector<std::pair<double, double>> quantiles; // (probability, loss)
    double quadrature_error = 0.0;
};

/// Aggregate "L excess of K" treaty; limit = +inf is a plain stop-loss.
struct LayerSpec {
    double attachment = 0.0;
    double limit = std::numeric_limits<double>::infinity();
    std::vector<double> payment_dates;
};

/// Best-estimate ultimate loss U_t = E[U | observation]. Rejects priors with
/// an infinite mean.
double best_estimate(const ConditionalLaw& law);

/// Variance of the ultimate loss (equivalently of the future payments).
double conditional_variance(const ConditionalLaw& law);

/// E[xi_t | F_s] = ((T-t) xi_s + (t-s) U_s)/(T-s) for s < t <= T.
double paid_claims_conditional_mean(const ConditionalLaw& law, double t);

/// E[xi_t^2 | F_s]; the exp*Phi kernel is evaluated in log space.
double paid_claims_conditional_second_moment(const ConditionalLaw& law, double t);

/// Expected exceedance D_st(K) = E[(xi_t - K)^+ | F_s] for s < t <= T.
double expected_exceedance(const ConditionalLaw& law, double t, double K);

/// Expected reinsurance payment per date: the increment of the layer value
/// between consecutive payment dates. Payments are nonnegative and telescope.
std::vector<std::pair<double, double>> layer_recovery_schedule(const ConditionalLaw& law,
                                                               const LayerSpec& layer);

/// E[xi_t | xi_s, xi_t > theta]; rejects conditioning events with
/// probability below 1e-12.
double conditional_value_at_risk(const ConditionalLaw& law, double t, double theta);

/// Finite-L tail ratio Q[U > L] / Q[U - xi_t > L | xi_t].
double tail_ratio(const ConditionalLaw& law, double L);

/// L -> inf limit of the ratio: normalizer * lim p(L)/p(L+xi). Closed form
/// for the parametric families (+inf when the prior tail is lighter than
/// exponential), numerical L-sweep for tabulated priors.
double tail_ratio_limit(const ConditionalLaw& law);

/// Full report: best estimate, reserve, variance and quantiles.
ReservingReport make_report(const ConditionalLaw& law,
                            const std::vector<double>& probs = {0.05, 0.25, 0.5, 0.75, 0.95});

} // namespace srb
