#pragma once

#include "srb/lrb.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace srb {

/// Deterministic exposure-driven operational time tau(t) with tau(0) = 0 and
/// tau(T) = T.

struct IdentityCurve {};

struct WeibullCurve {
    double a, b;
};

/// Piecewise-constant marginal exposure between knots.
struct TabulatedCurve {
    std::vector<double> times;
    std::vector<double> exposure;
};

using ExposureCurve = std::variant<IdentityCurve, WeibullCurve, TabulatedCurve>;

void validate(const ExposureCurve& curve, double T);

double operational_time(const ExposureCurve& curve, double T, double t);
double operational_time_inverse(const ExposureCurve& curve, double T, double tau);

/// Time of maximal marginal exposure for a Weibull curve; empty when b <= 1
/// (monotone decreasing exposure, no interior peak).
std::optional<double> exposure_peak(const WeibullCurve& curve);

/// The time-changed model view: observations and query times are mapped
/// through tau and everything else delegates to the unchanged machinery.
class TimechangedModel {
public:
    TimechangedModel(BridgeParams params, PriorLaw prior, ExposureCurve curve);

    const BridgeParams& params() const { return params_; }
    const PriorLaw& prior() const { return prior_; }
    const ExposureCurve& curve() const { return curve_; }

    double to_operational(double t) const { return operational_time(curve_, params_.T, t); }
    double from_operational(double tau) const {
        return operational_time_inverse(curve_, params_.T, tau);
    }

    Observation map_observation(double t, double xi) const;
    ConditionalLaw at(double t, double xi) const;

private:
    BridgeParams params_;
    PriorLaw prior_;
    ExposureCurve curve_;
};

} // namespace srb
