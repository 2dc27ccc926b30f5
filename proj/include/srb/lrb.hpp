#pragma once

#include "srb/prior.hpp"
#include "srb/stable.hpp"

namespace srb {

/// A time-stamped paid-claims reading anchoring the conditional laws.
struct Observation {
    double s;  // time in [0,T)
    double xi; // paid to date
};

void validate(const Observation& obs, double T);

/// Unnormalized conditioning mass psi_s(R; xi): the z-integral of
/// (1 - s/T)(1 - xi/z)^{-3/2} exp{ (c^2/2)(T^2/z - (T-s)^2/(z-xi)) } against
/// the prior. Equals 1 at s = 0.
double psi_mass(const BridgeParams& p, const PriorLaw& prior, const Observation& obs);

/// Transition density of the random bridge,
/// psi_t(R;y)/psi_s(R;x) * f_{t-s}(y-x).
double transition_density(const BridgeParams& p, const PriorLaw& prior, const Observation& from,
                          const Observation& to);

/// The posterior law of the ultimate loss given one observation. The
/// normalizer (the kernel mass without the (1-s/T) prefactor, i.e. the
/// denominator of the posterior density) is cached at construction and
/// shared by every downstream expectation.
class ConditionalLaw {
public:
    ConditionalLaw(BridgeParams params, PriorLaw prior, Observation anchor);

    const BridgeParams& params() const { return params_; }
    const PriorLaw& prior() const { return prior_; }
    const Observation& anchor() const { return anchor_; }

    /// Kernel mass int (z/(z-xi))^{3/2} exp(...) nu(dz); 1 at the trivial anchor.
    double normalizer() const { return norm_.value; }
    double normalizer_error() const { return norm_.error; }
    /// psi_s(R;xi) = (1 - s/T) * normalizer().
    double psi() const { return (1.0 - anchor_.s / params_.T) * norm_.value; }

    /// log of the conditioning kernel (z/(z-xi))^{3/2} exp(...); the second
    /// argument is z - xi computed without cancellation.
    double log_kernel(double z, double z_minus_xi) const;

    double posterior_density(double z) const;
    double posterior_cdf(double z) const;
    /// Bisection on the posterior distribution function, 1e-8 in probability.
    double posterior_quantile(double p) const;

    /// Posterior expectation of a log-space integrand over (max(lower,xi), inf).
    IntegrationResult expect(const LogIntegrand& f, double lower) const;
    IntegrationResult expect(const LogIntegrand& f) const { return expect(f, anchor_.xi); }
    IntegrationResult expect_range(const LogIntegrand& f, double lower, double upper) const;

private:
    BridgeParams params_;
    PriorLaw prior_;
    Observation anchor_;
    IntegrationResult norm_;
};

/// Dynamic consistency: the law re-anchored at a later observation. Rejects
/// non-monotone observation sequences.
ConditionalLaw reanchor(const ConditionalLaw& law, const Observation& new_obs);

} // namespace srb
