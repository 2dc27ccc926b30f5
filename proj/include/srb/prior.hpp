#pragma once

#include "srb/pchip.hpp"
#include "srb/rng.hpp"
#include "srb/specfun.hpp"
#include "srb/stable.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace srb {

/// Quadrature result together with the achieved error estimate (relative,
/// with an absolute floor for near-zero results).
struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
};

class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double estimate)
        : std::runtime_error(what), error_estimate(estimate) {}
    double error_estimate;
};

/// Integrand in log space. The second argument is z - lower, computed without
/// cancellation near the lower endpoint; integrands with boundary layers in
/// (z - lower) must use it instead of re-deriving the difference.
using LogIntegrand = std::function<LogWeighted(double z, double dz)>;

/// Adaptive double-exponential quadrature of exp-scale integrands over
/// (lower, upper). The lower boundary layer is mapped out by w = 1/(z-lower),
/// an infinite upper tail by v = m/z; both transformed pieces are handled by
/// tanh_sinh/exp_sinh rules. scale_hint sets the split between the pieces.
IntegrationResult integrate_log_range(const LogIntegrand& f, double lower, double upper,
                                      double scale_hint);

// --- a priori ultimate-loss laws ---

struct GigPrior {
    double lambda, delta, gamma;
    double log_norm; // log of int x^{lambda-1} exp(-(delta^2/x + gamma^2 x)/2) dx
};

struct GpdPrior {
    double sigma, mu, shape;
};

struct ExponentialPrior {
    double rate;
};

struct HalfNormalPrior {
    double scale;
};

struct LevyStablePrior {
    double c, T;
};

struct TabulatedPrior {
    std::vector<double> grid;
    std::vector<double> density; // raw input values
    PchipSpline log_density;     // interpolant of log density
    double log_norm;             // renormalization
    std::vector<double> cdf;     // distribution function at cdf_grid
    std::vector<double> cdf_grid;
};

using PriorLaw =
    std::variant<GigPrior, GpdPrior, ExponentialPrior, HalfNormalPrior, LevyStablePrior, TabulatedPrior>;

/// Factories validate the parameter domains and precompute normalizations.
PriorLaw make_gig(double lambda, double delta, double gamma);
PriorLaw make_gpd(double sigma, double mu, double shape);
PriorLaw make_exponential(double rate);
PriorLaw make_half_normal(double scale);
PriorLaw make_levy_stable(double c, double T);
PriorLaw make_tabulated(std::vector<double> grid, std::vector<double> density);

struct MomentReport {
    double mean = 0.0;
    double second_moment = 0.0;
    bool mean_finite = true;
    bool second_moment_finite = true;
};

struct Support {
    double lower;
    double upper; // +inf for unbounded laws
};

Support prior_support(const PriorLaw& law);

double prior_log_density(const PriorLaw& law, double z);
double prior_density(const PriorLaw& law, double z);
MomentReport prior_moments(const PriorLaw& law);
double prior_cdf(const PriorLaw& law, double z);
double prior_tail(const PriorLaw& law, double z); // 1 - cdf, accurate in the tail
double prior_quantile(const PriorLaw& law, double p);
double sample_prior(const PriorLaw& law, CounterRng& rng);

/// Typical scale of the law (median-flavoured); steers quadrature splits.
double prior_scale_hint(const PriorLaw& law);

/// Adaptive quadrature of int_lower^inf integrand(z) nu(dz). The integrand is
/// supplied in log space; target relative error 1e-9 with absolute floor
/// 1e-12, achieved estimate reported. Throws QuadratureError when the
/// estimate cannot be trusted.
IntegrationResult integrate_against(const PriorLaw& law, const LogIntegrand& integrand,
                                    double lower);

/// Same, with a finite upper limit (distribution-function evaluations).
IntegrationResult integrate_against_range(const PriorLaw& law, const LogIntegrand& integrand,
                                          double lower, double upper);

} // namespace srb
