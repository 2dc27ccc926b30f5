#include "srb/lrb.hpp"

#include <cmath>
#include <stdexcept>

namespace srb {

void validate(const Observation& obs, double T) {
    if (!(obs.s >= 0.0 && obs.s < T))
        throw std::invalid_argument("Observation: time must lie in [0,T)");
    if (!(obs.xi >= 0.0)) throw std::invalid_argument("Observation: paid amount must be >= 0");
    if (obs.s == 0.0 && obs.xi != 0.0)
        throw std::invalid_argument("Observation: nothing can be paid at time 0");
}

namespace {

// log (z/(z-xi))^{3/2} exp(-(c^2/2)((T-s)^2/(z-xi) - T^2/z))
double kernel_log(const BridgeParams& p, const Observation& o, double z, double dz) {
    const double tt = p.T - o.s;
    return 1.5 * (std::log(z) - std::log(dz)) -
           0.5 * p.c * p.c * (tt * tt / dz - p.T * p.T / z);
}

} // namespace

ConditionalLaw::ConditionalLaw(BridgeParams params, PriorLaw prior, Observation anchor)
    : params_(params), prior_(std::move(prior)), anchor_(anchor) {
    validate(params_);
    validate(anchor_, params_.T);
    if (anchor_.s == 0.0) {
        norm_ = {1.0, 0.0}; // psi_0 = nu
        return;
    }
    norm_ = integrate_against(
        prior_, [this](double z, double dz) { return LogWeighted::from_log(log_kernel(z, dz)); },
        anchor_.xi);
    if (!(norm_.value > 0.0))
        throw QuadratureError("ConditionalLaw: conditioning mass vanished", norm_.error);
}

double ConditionalLaw::log_kernel(double z, double z_minus_xi) const {
    if (anchor_.s == 0.0) return 0.0;
    return kernel_log(params_, anchor_, z, z_minus_xi);
}

double ConditionalLaw::posterior_density(double z) const {
    if (z <= anchor_.xi) return 0.0;
    const double lp = prior_log_density(prior_, z);
    if (!std::isfinite(lp)) return 0.0;
    return std::exp(log_kernel(z, z - anchor_.xi) + lp - std::log(norm_.value));
}

IntegrationResult ConditionalLaw::expect_range(const LogIntegrand& f, double lower,
                                               double upper) const {
    const double lo = std::max(lower, anchor_.xi);
    IntegrationResult r = integrate_against_range(
        prior_,
        [this, &f, lo](double z, double dz) {
            LogWeighted lw = f(z, dz);
            if (lw.sign == 0) return lw;
            // dz is z - lo; shift to z - xi for the kernel.
            return lw.scaled(log_kernel(z, dz + (lo - anchor_.xi)));
        },
        lo, upper);
    r.value /= norm_.value;
    r.error += norm_.error;
    return r;
}

IntegrationResult ConditionalLaw::expect(const LogIntegrand& f, double lower) const {
    return expect_range(f, lower, std::numeric_limits<double>::infinity());
}

double ConditionalLaw::posterior_cdf(double z) const {
    if (z <= anchor_.xi) return 0.0;
    auto unit = [](double, double) { return LogWeighted::from_log(0.0); };
    return std::clamp(expect_range(unit, anchor_.xi, z).value, 0.0, 1.0);
}

double ConditionalLaw::posterior_quantile(double p) const {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("posterior_quantile: p must lie in (0,1)");
    const double xi = anchor_.xi;
    double span = prior_scale_hint(prior_);
    double hi = xi + span;
    int guard = 0;
    while (posterior_cdf(hi) < p) {
        span *= 2.0;
        hi = xi + span;
        if (++guard > 400) throw QuadratureError("posterior_quantile: bracket failed", 1.0);
    }
    double lo = xi;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 120; ++it) {
        mid = 0.5 * (lo + hi);
        const double c = posterior_cdf(mid);
        if (std::abs(c - p) <= 1e-8) break;
        (c < p ? lo : hi) = mid;
        if (hi - lo <= 1e-14 * std::max(1.0, hi)) break;
    }
    return mid;
}

double psi_mass(const BridgeParams& p, const PriorLaw& prior, const Observation& obs) {
    ConditionalLaw law(p, prior, obs);
    return law.psi();
}

double transition_density(const BridgeParams& p, const PriorLaw& prior, const Observation& from,
                          const Observation& to) {
    validate(from, p.T);
    validate(to, p.T);
    if (!(from.s < to.s)) throw std::invalid_argument("transition_density: times must increase");
    if (to.xi < from.xi)
        throw std::invalid_argument("transition_density: paid claims cannot decrease");
    const ConditionalLaw num(p, prior, to);
    const ConditionalLaw den(p, prior, from);
    return num.psi() / den.psi() * subordinator_density(p, to.s - from.s, to.xi - from.xi);
}

ConditionalLaw reanchor(const ConditionalLaw& law, const Observation& new_obs) {
    const Observation& old = law.anchor();
    if (new_obs.s == old.s && new_obs.xi == old.xi) return law;
    if (!(new_obs.s > old.s))
        throw std::invalid_argument("reanchor: observation times must increase");
    if (new_obs.xi < old.xi)
        throw std::invalid_argument("reanchor: paid claims cannot decrease");
    return ConditionalLaw(law.params(), law.prior(), new_obs);
}

} // namespace srb
