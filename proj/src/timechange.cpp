#include "srb/timechange.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace srb {

namespace {

// Cumulative exposure of a piecewise-constant tabulated curve up to t.
double tab_cumulative(const TabulatedCurve& c, double T, double t) {
    double acc = 0.0;
    const std::size_t n = c.times.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = c.times[i];
        const double b = std::min(c.times[i + 1], T);
        if (t <= a) break;
        acc += c.exposure[i] * (std::min(t, b) - a);
    }
    return acc;
}

} // namespace

void validate(const ExposureCurve& curve, double T) {
    if (const auto* w = std::get_if<WeibullCurve>(&curve)) {
        if (!(w->a > 0.0 && w->b > 0.0))
            throw std::invalid_argument("WeibullCurve: parameters must be > 0");
    } else if (const auto* tc = std::get_if<TabulatedCurve>(&curve)) {
        const std::size_t n = tc->times.size();
        if (n < 2 || tc->exposure.size() != n)
            throw std::invalid_argument("TabulatedCurve: need matching times/exposure with >= 2 knots");
        if (tc->times.front() != 0.0)
            throw std::invalid_argument("TabulatedCurve: times must start at 0");
        for (std::size_t i = 1; i < n; ++i)
            if (!(tc->times[i] > tc->times[i - 1]))
                throw std::invalid_argument("TabulatedCurve: times must be strictly increasing");
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (tc->exposure[i] < 0.0)
                throw std::invalid_argument("TabulatedCurve: exposure must be >= 0");
            total += tc->exposure[i] * (tc->times[i + 1] - tc->times[i]);
        }
        if (!(total > 0.0)) throw std::invalid_argument("TabulatedCurve: exposure is identically zero");
        if (!(tc->times.back() >= T))
            throw std::invalid_argument("TabulatedCurve: knots must cover [0,T]");
    }
}

double operational_time(const ExposureCurve& curve, double T, double t) {
    if (!(t >= 0.0 && t <= T)) throw std::invalid_argument("operational_time: t must lie in [0,T]");
    if (std::holds_alternative<IdentityCurve>(curve)) return t;
    if (const auto* w = std::get_if<WeibullCurve>(&curve)) {
        if (t == 0.0) return 0.0;
        if (t == T) return T;
        const double num = -std::expm1(-std::pow(t / w->a, w->b));
        const double den = -std::expm1(-std::pow(T / w->a, w->b));
        return T * num / den;
    }
    const auto& tc = std::get<TabulatedCurve>(curve);
    return T * tab_cumulative(tc, T, t) / tab_cumulative(tc, T, T);
}

double operational_time_inverse(const ExposureCurve& curve, double T, double tau) {
    if (!(tau >= 0.0 && tau <= T))
        throw std::invalid_argument("operational_time_inverse: tau must lie in [0,T]");
    if (std::holds_alternative<IdentityCurve>(curve)) return tau;
    if (const auto* w = std::get_if<WeibullCurve>(&curve)) {
        if (tau == 0.0) return 0.0;
        if (tau == T) return T;
        const double den = -std::expm1(-std::pow(T / w->a, w->b));
        const double u = tau / T * den;
        return w->a * std::pow(-std::log1p(-u), 1.0 / w->b);
    }
    // Piecewise-linear tau: invert by bisection (monotone, cheap).
    double lo = 0.0, hi = T;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (operational_time(curve, T, mid) < tau ? lo : hi) = mid;
        if (hi - lo <= 1e-14 * T) break;
    }
    return 0.5 * (lo + hi);
}

std::optional<double> exposure_peak(const WeibullCurve& curve) {
    if (curve.b <= 1.0) return std::nullopt;
    return curve.a * std::pow((curve.b - 1.0) / curve.b, 1.0 / curve.b);
}

TimechangedModel::TimechangedModel(BridgeParams params, PriorLaw prior, ExposureCurve curve)
    : params_(params), prior_(std::move(prior)), curve_(std::move(curve)) {
    srb::validate(params_);
    srb::validate(curve_, params_.T);
}

Observation TimechangedModel::map_observation(double t, double xi) const {
    return Observation{to_operational(t), xi};
}

ConditionalLaw TimechangedModel::at(double t, double xi) const {
    return ConditionalLaw(params_, prior_, map_observation(t, xi));
}

} // namespace srb
