#include "srb/reserve.hpp"

#include "srb/bridge.hpp"
#include "srb/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace srb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite_mean(const ConditionalLaw& law) {
    if (!prior_moments(law.prior()).mean_finite)
        throw std::domain_error("reserve: the prior ultimate-loss mean is infinite");
}

void require_finite_second_moment(const ConditionalLaw& law) {
    if (!prior_moments(law.prior()).second_moment_finite)
        throw std::domain_error("reserve: the prior ultimate-loss second moment is infinite");
}

double query_time(const ConditionalLaw& law, double t) {
    if (!(t > law.anchor().s && t <= law.params().T))
        throw std::invalid_argument("reserve: query time must lie in (s, T]");
    return t;
}

// Bridge distribution/incomplete-moment pair at horizon (t-s, T-s), clamped
// onto [0, z-xi] so that posterior mass below the threshold contributes its
// pinned value. At t = T the bridge degenerates to the indicator forms.
struct ClampedBridge {
    const ConditionalLaw& law;
    double t;

    double F(double w, double zz) const { // w = threshold - xi, zz = z - xi
        if (w <= 0.0) return 0.0;
        if (w >= zz) return 1.0;
        const auto& p = law.params();
        const double s = law.anchor().s;
        if (t >= p.T) return 0.0; // w < zz at terminal time: mass sits at zz
        return bridge_cdf(BridgeParams{p.c, p.T - s}, t - s, w, zz);
    }
    double M(double w, double zz) const {
        if (w <= 0.0) return 0.0;
        const auto& p = law.params();
        const double s = law.anchor().s;
        const double total = (t >= p.T ? 1.0 : (t - s) / (p.T - s)) * zz;
        if (w >= zz) return total;
        if (t >= p.T) return 0.0;
        return bridge_incomplete_first_moment(BridgeParams{p.c, p.T - s}, t - s, w, zz);
    }
};

double linear_mean(const ConditionalLaw& law, double t, double u_s) {
    const double T = law.params().T;
    const double s = law.anchor().s;
    return ((T - t) * law.anchor().xi + (t - s) * u_s) / (T - s);
}

double exceedance_impl(const ConditionalLaw& law, double t, double K, double u_s) {
    const double xi = law.anchor().xi;
    const double lin = linear_mean(law, t, u_s) - K;
    if (K <= xi) return lin;
    const ClampedBridge cb{law, t};
    const double w = K - xi;
    const double f_int = law.expect([&](double, double dz) {
                                return LogWeighted::from_value(cb.F(w, dz));
                            })
                             .value;
    const double m_int = law.expect([&](double, double dz) {
                                return LogWeighted::from_value(cb.M(w, dz));
                            })
                             .value;
    return lin + (K - xi) * f_int - m_int;
}

} // namespace

double best_estimate(const ConditionalLaw& law) {
    require_finite_mean(law);
    IntegrationResult r =
        law.expect([](double z, double) { return LogWeighted::from_log(std::log(z)); });
    return std::max(r.value, law.anchor().xi);
}

double conditional_variance(const ConditionalLaw& law) {
    require_finite_second_moment(law);
    const double u = best_estimate(law);
    IntegrationResult r = law.expect([u](double z, double) {
        const double d = z - u;
        return LogWeighted::from_value(d * d);
    });
    return std::max(r.value, 0.0);
}

double paid_claims_conditional_mean(const ConditionalLaw& law, double t) {
    query_time(law, t);
    return linear_mean(law, t, best_estimate(law));
}

double paid_claims_conditional_second_moment(const ConditionalLaw& law, double t) {
    query_time(law, t);
    require_finite_second_moment(law);
    const auto& p = law.params();
    const double s = law.anchor().s;
    const double xi = law.anchor().xi;
    const double Ts = p.T - s;

    const double second = law.expect([](double z, double) {
                                 return LogWeighted::from_log(2.0 * std::log(z));
                             })
                              .value;
    if (t >= p.T) return second;

    // Kernel (z-xi)^{3/2} e^{c^2 (T-s)^2 / (2(z-xi))} Phi[-c(T-s)/sqrt(z-xi)].
    const double correction =
        law.expect([&](double, double dz) {
               if (dz <= 0.0) return LogWeighted{};
               LogWeighted scp =
                   scaled_cdf_product(0.5 * p.c * p.c * Ts * Ts / dz, -p.c * Ts / std::sqrt(dz));
               return scp.scaled(1.5 * std::log(dz));
           })
            .value;

    return ((p.T - t) / Ts) * xi * xi + ((t - s) / Ts) * second -
           p.c * (p.T - t) * std::sqrt(2.0 * M_PI) * correction;
}

double expected_exceedance(const ConditionalLaw& law, double t, double K) {
    query_time(law, t);
    if (!(K >= 0.0)) throw std::invalid_argument("expected_exceedance: K must be >= 0");
    return exceedance_impl(law, t, K, best_estimate(law));
}

std::vector<std::pair<double, double>> layer_recovery_schedule(const ConditionalLaw& law,
                                                               const LayerSpec& layer) {
    if (!(layer.attachment >= 0.0))
        throw std::invalid_argument("layer_recovery_schedule: attachment must be >= 0");
    if (!(layer.limit > 0.0))
        throw std::invalid_argument("layer_recovery_schedule: limit must be > 0");
    const double s = law.anchor().s;
    const double T = law.params().T;
    const double xi = law.anchor().xi;
    const double K = layer.attachment;
    const bool capped = std::isfinite(layer.limit);

    const double u_s = best_estimate(law);
    auto layer_value = [&](double t) {
        double v = exceedance_impl(law, t, K, u_s);
        if (capped) v -= exceedance_impl(law, t, K + layer.limit, u_s);
        return v;
    };

    double prev = std::max(xi - K, 0.0);
    if (capped) prev -= std::max(xi - K - layer.limit, 0.0);

    std::vector<std::pair<double, double>> schedule;
    for (double t : layer.payment_dates) {
        if (t <= s) continue; // degenerate date, contributes nothing
        if (t > T) throw std::invalid_argument("layer_recovery_schedule: dates must lie in (s, T]");
        const double v = layer_value(t);
        schedule.emplace_back(t, v - prev);
        prev = v;
    }
    return schedule;
}

double conditional_value_at_risk(const ConditionalLaw& law, double t, double theta) {
    query_time(law, t);
    const double xi = law.anchor().xi;
    if (!(theta > xi))
        throw std::invalid_argument("conditional_value_at_risk: threshold must exceed paid to date");
    const double u_s = best_estimate(law);
    const ClampedBridge cb{law, t};
    const double w = theta - xi;
    const double f_int = law.expect([&](double, double dz) {
                                return LogWeighted::from_value(cb.F(w, dz));
                            })
                             .value;
    const double m_int = law.expect([&](double, double dz) {
                                return LogWeighted::from_value(cb.M(w, dz));
                            })
                             .value;
    const double denom = 1.0 - f_int;
    if (denom < 1e-12)
        throw std::domain_error("conditional_value_at_risk: exceedance probability below 1e-12");
    return (linear_mean(law, t, u_s) - m_int) / denom;
}

double tail_ratio(const ConditionalLaw& law, double L) {
    if (!(L > 0.0)) throw std::invalid_argument("tail_ratio: L must be > 0");
    const double numer = prior_tail(law.prior(), L);
    auto unit = [](double, double) { return LogWeighted::from_log(0.0); };
    const double denom = law.expect(unit, law.anchor().xi + L).value;
    if (!(denom > 0.0)) throw QuadratureError("tail_ratio: conditional tail mass vanished", 1.0);
    return numer / denom;
}

double tail_ratio_limit(const ConditionalLaw& law) {
    const double xi = law.anchor().xi;
    const double mass = law.normalizer();
    const PriorLaw& prior = law.prior();
    if (std::holds_alternative<LevyStablePrior>(prior)) return mass;
    if (const auto* e = std::get_if<ExponentialPrior>(&prior)) return mass * std::exp(e->rate * xi);
    if (std::holds_alternative<HalfNormalPrior>(prior)) return kInf; // Gaussian-type tail
    if (const auto* g = std::get_if<GigPrior>(&prior))
        return mass * std::exp(0.5 * g->gamma * g->gamma * xi);
    if (std::holds_alternative<GpdPrior>(prior)) return mass; // power-law tail
    // Tabulated: numerical L-sweep with a convergence check.
    const auto* tab = std::get_if<TabulatedPrior>(&prior);
    const double hi = tab->grid.back();
    double prev = kInf;
    double ratio = kInf;
    bool converged = false;
    for (double frac : {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}) {
        const double L = frac * (hi - xi);
        const double pl = prior_density(prior, L);
        const double pls = prior_density(prior, L + xi);
        if (!(pl > 0.0 && pls > 0.0)) break;
        ratio = pl / pls;
        if (std::isfinite(prev) && std::abs(ratio - prev) <= 1e-3 * std::abs(prev)) {
            converged = true;
            break;
        }
        prev = ratio;
    }
    if (!converged)
        throw QuadratureError("tail_ratio_limit: L-sweep did not converge for tabulated prior",
                              std::isfinite(ratio) ? ratio : 0.0);
    return mass * ratio;
}

ReservingReport make_report(const ConditionalLaw& law, const std::vector<double>& probs) {
    ReservingReport rep;
    rep.at = law.anchor();
    require_finite_second_moment(law);
    IntegrationResult mean =
        law.expect([](double z, double) { return LogWeighted::from_log(std::log(z)); });
    rep.best_estimate_ultimate = std::max(mean.value, law.anchor().xi);
    rep.reserve = rep.best_estimate_ultimate - law.anchor().xi;
    rep.variance = conditional_variance(law);
    rep.quadrature_error = std::max(mean.error, law.normalizer_error());
    for (double p : probs) rep.quantiles.emplace_back(p, law.posterior_quantile(p));
    return rep;
}

} // namespace srb
