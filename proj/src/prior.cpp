#include "srb/prior.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <random>

namespace srb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSqrt2Pi = 0.91893853320467274178;

double safe_exp(double lm) { return lm < -745.0 ? 0.0 : std::exp(lm); }

struct PieceResult {
    double value = 0.0;
    double abs_err = 0.0;
};

template <class F>
PieceResult tanh_piece(const F& f, double a, double b) {
    thread_local boost::math::quadrature::tanh_sinh<double> rule(12);
    double err = 0.0, l1 = 0.0;
    double v = rule.integrate(f, a, b, 1e-10, &err, &l1);
    double rel = l1 > 0.0 ? err / l1 : 0.0;
    return {v, rel * std::abs(v)};
}

template <class F>
PieceResult exp_piece(const F& f, double a) {
    thread_local boost::math::quadrature::exp_sinh<double> rule(11);
    double err = 0.0, l1 = 0.0;
    double v = rule.integrate(f, a, kInf, 1e-10, &err, &l1);
    double rel = l1 > 0.0 ? err / l1 : 0.0;
    return {v, rel * std::abs(v)};
}

// Probe the integrand on a log-spaced offset grid to locate its magnitude;
// the returned shift keeps the adaptive rules in safe floating range.
double probe_shift(const LogIntegrand& f, double lower, double upper, double hint) {
    static constexpr double offsets[] = {1e-12, 1e-9, 1e-6, 1e-4, 1e-3, 1e-2, 0.05, 0.1,
                                         0.25,  0.5,  1.0,  2.0,  4.0,  8.0,  16.0, 64.0,
                                         256.0, 1e4,  1e6,  1e9};
    double best = -kInf;
    for (double o : offsets) {
        double dz = o * hint;
        double z = lower + dz;
        if (z >= upper) break;
        LogWeighted lw = f(z, dz);
        if (lw.sign != 0 && lw.log_mag == lw.log_mag) best = std::max(best, lw.log_mag);
    }
    if (std::isfinite(upper)) {
        for (double o : {0.5, 0.1, 1e-3, 1e-6}) {
            double z = upper - o * (upper - lower);
            if (z <= lower) continue;
            LogWeighted lw = f(z, z - lower);
            if (lw.sign != 0 && lw.log_mag == lw.log_mag) best = std::max(best, lw.log_mag);
        }
    }
    return best;
}

} // namespace

IntegrationResult integrate_log_range(const LogIntegrand& f, double lower, double upper,
                                      double scale_hint) {
    if (!(scale_hint > 0.0)) scale_hint = 1.0;
    if (!(upper > lower)) return {0.0, 0.0};

    const double shift = probe_shift(f, lower, upper, scale_hint);
    if (!std::isfinite(shift)) return {0.0, 0.0}; // no detectable mass

    const bool tail_infinite = !std::isfinite(upper);
    const double m = tail_infinite ? lower + scale_hint
                                   : std::min(lower + scale_hint, lower + 0.5 * (upper - lower));

    std::vector<PieceResult> pieces;
    try {
        // Boundary-layer piece (lower, m]: w = 1/(z - lower) maps integrable
        // layers of type (z-lower)^{-3/2} exp(-a/(z-lower)) onto a decaying
        // tail; dz stays exact down to denormals.
        const double w0 = 1.0 / (m - lower);
        pieces.push_back(exp_piece(
            [&](double w) {
                const double dz = 1.0 / w;
                LogWeighted lw = f(lower + dz, dz);
                if (lw.sign == 0) return 0.0;
                return lw.sign * safe_exp(lw.log_mag - shift - 2.0 * std::log(w));
            },
            w0));

        if (tail_infinite) {
            // Tail piece via v = m/z on (0,1].
            pieces.push_back(tanh_piece(
                [&](double v) {
                    const double z = m / v;
                    LogWeighted lw = f(z, z - lower);
                    if (lw.sign == 0) return 0.0;
                    return lw.sign * safe_exp(lw.log_mag - shift + std::log(m) - 2.0 * std::log(v));
                },
                0.0, 1.0));
        } else if (m < upper) {
            pieces.push_back(tanh_piece(
                [&](double z) {
                    LogWeighted lw = f(z, z - lower);
                    if (lw.sign == 0) return 0.0;
                    return lw.sign * safe_exp(lw.log_mag - shift);
                },
                m, upper));
        }
    } catch (const std::exception& e) {
        throw QuadratureError(std::string("quadrature evaluation failed: ") + e.what(), kInf);
    }

    double total = 0.0, abs_err = 0.0;
    for (const auto& p : pieces) {
        total += p.value;
        abs_err += p.abs_err;
    }
    IntegrationResult out;
    if (total == 0.0) {
        out.value = 0.0;
    } else {
        // Undo the shift in log space so extreme scales stay representable
        // for as long as the final value itself is.
        const double lm = std::log(std::abs(total)) + shift;
        out.value = (total < 0.0 ? -1.0 : 1.0) * safe_exp(lm);
    }
    out.error = abs_err / std::max(std::abs(total), 1e-12);
    return out;
}

// --- GIG normalization helpers ---

namespace {

bool half_integer_order(double lambda, int* n_out) {
    double tw = 2.0 * std::abs(lambda);
    double r = std::round(tw);
    if (std::abs(tw - r) > 1e-12) return false;
    long ri = static_cast<long>(r);
    if (ri % 2 == 0) return false;
    *n_out = static_cast<int>((ri - 1) / 2);
    return true;
}

// log of int_0^inf x^{lambda-1} exp(-(delta^2/x + gamma^2 x)/2) dx.
double log_gig_norm(double lambda, double delta, double gamma, bool* finite) {
    *finite = true;
    if (delta == 0.0) {
        if (lambda <= 0.0) {
            *finite = false;
            return kInf;
        }
        return std::lgamma(lambda) + lambda * std::log(2.0 / (gamma * gamma));
    }
    if (gamma == 0.0) {
        if (lambda >= 0.0) {
            *finite = false;
            return kInf;
        }
        return std::lgamma(-lambda) + lambda * std::log(delta * delta / 2.0);
    }
    const double w = delta * gamma;
    int n = 0;
    if (half_integer_order(lambda, &n)) {
        return std::log(2.0) - w + std::log(bessel_k_half_integer_scaled(n, w)) +
               lambda * std::log(delta / gamma);
    }
    // Numeric K_lambda via the normalizing integral itself.
    const double mode = ((lambda - 1.0) + std::hypot(lambda - 1.0, w)) / (gamma * gamma);
    auto g = [&](double z, double) {
        return LogWeighted::from_log((lambda - 1.0) * std::log(z) -
                                     0.5 * (delta * delta / z + gamma * gamma * z));
    };
    IntegrationResult r = integrate_log_range(g, 0.0, kInf, std::max(mode, 1e-8));
    return std::log(r.value);
}

double gig_moment_log(const GigPrior& g, int k, bool* finite) {
    bool f2 = true;
    double ln = log_gig_norm(g.lambda + k, g.delta, g.gamma, &f2);
    *finite = f2;
    return f2 ? ln - g.log_norm : kInf;
}

// Inverse-Gaussian draw, mean mu and shape lam (Michael-Schucany-Haas).
double sample_ig(double mu, double lam, CounterRng& rng) {
    const double v = rng.normal();
    const double y = v * v;
    const double x = mu + 0.5 * mu * mu * y / lam -
                     0.5 * (mu / lam) * std::sqrt(4.0 * mu * lam * y + mu * mu * y * y);
    if (rng.uniform01() <= mu / (mu + x)) return x;
    return mu * mu / x;
}

} // namespace

// --- factories ---

PriorLaw make_gig(double lambda, double delta, double gamma) {
    bool ok = false;
    if (lambda > 0.0) ok = delta >= 0.0 && gamma > 0.0;
    else if (lambda == 0.0) ok = delta > 0.0 && gamma > 0.0;
    else ok = delta > 0.0 && gamma >= 0.0;
    if (!ok) throw std::invalid_argument("make_gig: parameters outside the permitted domain");
    bool finite = true;
    double ln = log_gig_norm(lambda, delta, gamma, &finite);
    if (!finite || !std::isfinite(ln))
        throw std::invalid_argument("make_gig: normalization failed");
    return GigPrior{lambda, delta, gamma, ln};
}

PriorLaw make_gpd(double sigma, double mu, double shape) {
    if (!(sigma > 0.0)) throw std::invalid_argument("make_gpd: sigma must be > 0");
    if (!(mu >= 0.0)) throw std::invalid_argument("make_gpd: mu must be >= 0 (loss support)");
    if (!(shape > 0.0)) throw std::invalid_argument("make_gpd: shape must be > 0");
    return GpdPrior{sigma, mu, shape};
}

PriorLaw make_exponential(double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("make_exponential: rate must be > 0");
    return ExponentialPrior{rate};
}

PriorLaw make_half_normal(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("make_half_normal: scale must be > 0");
    return HalfNormalPrior{scale};
}

PriorLaw make_levy_stable(double c, double T) {
    validate(BridgeParams{c, T});
    return LevyStablePrior{c, T};
}

PriorLaw make_tabulated(std::vector<double> grid, std::vector<double> density) {
    const std::size_t n = grid.size();
    if (n < 2 || density.size() != n)
        throw std::invalid_argument("make_tabulated: need matching grid/density with >= 2 knots");
    if (!(grid.front() > 0.0))
        throw std::invalid_argument("make_tabulated: support must lie in (0,inf)");
    double dmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw std::invalid_argument("make_tabulated: grid must be strictly increasing");
        if (density[i] < 0.0) throw std::invalid_argument("make_tabulated: density must be >= 0");
        dmax = std::max(dmax, density[i]);
    }
    if (!(dmax > 0.0)) throw std::invalid_argument("make_tabulated: density is identically zero");

    // Monotone-cubic interpolation of log density; zeros are floored far
    // below the peak so they stay numerically zero after exponentiation.
    std::vector<double> logs(n);
    const double floor_v = dmax * 1e-300;
    for (std::size_t i = 0; i < n; ++i) logs[i] = std::log(std::max(density[i], floor_v));
    TabulatedPrior tab;
    tab.grid = std::move(grid);
    tab.density = std::move(density);
    tab.log_density = PchipSpline(tab.grid, logs);

    // Composite Simpson on a fine grid: normalization and distribution table.
    const std::size_t cells = 4096;
    const double a = tab.grid.front(), b = tab.grid.back();
    const double h = (b - a) / cells;
    std::vector<double> cdf(cells + 1, 0.0), xs(cells + 1);
    auto dens = [&](double x) { return std::exp(tab.log_density.eval(x)); };
    xs[0] = a;
    for (std::size_t i = 1; i <= cells; ++i) {
        const double x0 = a + (i - 1) * h, x1 = a + i * h;
        xs[i] = x1;
        cdf[i] = cdf[i - 1] + (h / 6.0) * (dens(x0) + 4.0 * dens(0.5 * (x0 + x1)) + dens(x1));
    }
    const double total = cdf.back();
    if (!(total > 0.0)) throw std::invalid_argument("make_tabulated: normalization failed");
    for (auto& v : cdf) v /= total;
    tab.log_norm = std::log(total);
    tab.cdf = std::move(cdf);
    tab.cdf_grid = std::move(xs);
    return tab;
}

// --- evaluation ---

Support prior_support(const PriorLaw& law) {
    return std::visit(
        [](const auto& l) -> Support {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, GpdPrior>) return {l.mu, kInf};
            else if constexpr (std::is_same_v<L, TabulatedPrior>) return {l.grid.front(), l.grid.back()};
            else return {0.0, kInf};
        },
        law);
}

double prior_log_density(const PriorLaw& law, double z) {
    if (!(z > 0.0)) throw std::invalid_argument("prior_density: z must be > 0");
    return std::visit(
        [z](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, GigPrior>) {
                return (l.lambda - 1.0) * std::log(z) -
                       0.5 * (l.delta * l.delta / z + l.gamma * l.gamma * z) - l.log_norm;
            } else if constexpr (std::is_same_v<L, GpdPrior>) {
                if (z <= l.mu) return -kInf;
                return -std::log(l.sigma) -
                       (1.0 / l.shape + 1.0) * std::log1p(l.shape * (z - l.mu) / l.sigma);
            } else if constexpr (std::is_same_v<L, ExponentialPrior>) {
                return std::log(l.rate) - l.rate * z;
            } else if constexpr (std::is_same_v<L, HalfNormalPrior>) {
                return 0.5 * std::log(2.0 / M_PI) - std::log(l.scale) -
                       0.5 * z * z / (l.scale * l.scale);
            } else if constexpr (std::is_same_v<L, LevyStablePrior>) {
                const double ct = l.c * l.T;
                return std::log(ct) - kLogSqrt2Pi - 1.5 * std::log(z) - 0.5 * ct * ct / z;
            } else {
                if (z < l.grid.front() || z > l.grid.back()) return -kInf;
                return l.log_density.eval(z) - l.log_norm;
            }
        },
        law);
}

double prior_density(const PriorLaw& law, double z) {
    double lg = prior_log_density(law, z);
    return std::isfinite(lg) ? std::exp(lg) : 0.0;
}

MomentReport prior_moments(const PriorLaw& law) {
    return std::visit(
        [&law](const auto& l) -> MomentReport {
            using L = std::decay_t<decltype(l)>;
            MomentReport r;
            if constexpr (std::is_same_v<L, GigPrior>) {
                bool f1 = true, f2 = true;
                double l1 = gig_moment_log(l, 1, &f1);
                double l2 = gig_moment_log(l, 2, &f2);
                r.mean_finite = f1;
                r.second_moment_finite = f2;
                r.mean = f1 ? std::exp(l1) : kInf;
                r.second_moment = f2 ? std::exp(l2) : kInf;
            } else if constexpr (std::is_same_v<L, GpdPrior>) {
                r.mean_finite = l.shape < 1.0;
                r.second_moment_finite = l.shape < 0.5;
                const double ey = r.mean_finite ? l.sigma / (1.0 - l.shape) : kInf;
                r.mean = r.mean_finite ? l.mu + ey : kInf;
                r.second_moment =
                    r.second_moment_finite
                        ? l.mu * l.mu + 2.0 * l.mu * ey +
                              2.0 * l.sigma * l.sigma / ((1.0 - l.shape) * (1.0 - 2.0 * l.shape))
                        : kInf;
            } else if constexpr (std::is_same_v<L, ExponentialPrior>) {
                r.mean = 1.0 / l.rate;
                r.second_moment = 2.0 / (l.rate * l.rate);
            } else if constexpr (std::is_same_v<L, HalfNormalPrior>) {
                r.mean = l.scale * std::sqrt(2.0 / M_PI);
                r.second_moment = l.scale * l.scale;
            } else if constexpr (std::is_same_v<L, LevyStablePrior>) {
                r.mean_finite = false;
                r.second_moment_finite = false;
                r.mean = kInf;
                r.second_moment = kInf;
            } else {
                auto lin = [](double z, double) { return LogWeighted::from_log(std::log(z)); };
                auto sq = [](double z, double) { return LogWeighted::from_log(2.0 * std::log(z)); };
                r.mean = integrate_against(law, lin, 0.0).value;
                r.second_moment = integrate_against(law, sq, 0.0).value;
            }
            return r;
        },
        law);
}

double prior_tail(const PriorLaw& law, double z) {
    if (z <= prior_support(law).lower) return 1.0;
    return std::visit(
        [&law, z](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, GpdPrior>) {
                return std::exp(-std::log1p(l.shape * (z - l.mu) / l.sigma) / l.shape);
            } else if constexpr (std::is_same_v<L, ExponentialPrior>) {
                return std::exp(-l.rate * z);
            } else if constexpr (std::is_same_v<L, HalfNormalPrior>) {
                return std::erfc(z / (l.scale * std::sqrt(2.0)));
            } else if constexpr (std::is_same_v<L, LevyStablePrior>) {
                return std::erf(l.c * l.T / std::sqrt(2.0 * z));
            } else if constexpr (std::is_same_v<L, TabulatedPrior>) {
                if (z >= l.grid.back()) return 0.0;
                return 1.0 - prior_cdf(law, z);
            } else {
                auto unit = [](double, double) { return LogWeighted::from_log(0.0); };
                return integrate_against(law, unit, z).value;
            }
        },
        law);
}

double prior_cdf(const PriorLaw& law, double z) {
    const Support s = prior_support(law);
    if (z <= s.lower) return 0.0;
    if (z >= s.upper) return 1.0;
    return std::visit(
        [&law, z](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, TabulatedPrior>) {
                auto it = std::upper_bound(l.cdf_grid.begin(), l.cdf_grid.end(), z);
                std::size_t i = static_cast<std::size_t>(it - l.cdf_grid.begin());
                if (i == 0) return 0.0;
                if (i >= l.cdf_grid.size()) return 1.0;
                const double x0 = l.cdf_grid[i - 1], x1 = l.cdf_grid[i];
                const double w = (z - x0) / (x1 - x0);
                return l.cdf[i - 1] + w * (l.cdf[i] - l.cdf[i - 1]);
            } else if constexpr (std::is_same_v<L, GigPrior>) {
                auto unit = [](double, double) { return LogWeighted::from_log(0.0); };
                return std::clamp(integrate_against_range(law, unit, 0.0, z).value, 0.0, 1.0);
            } else {
                return std::clamp(1.0 - prior_tail(law, z), 0.0, 1.0);
            }
        },
        law);
}

double prior_quantile(const PriorLaw& law, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("prior_quantile: p must lie in (0,1)");
    return std::visit(
        [&law, p](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, GpdPrior>) {
                return l.mu + l.sigma * std::expm1(-l.shape * std::log1p(-p)) / l.shape;
            } else if constexpr (std::is_same_v<L, ExponentialPrior>) {
                return -std::log1p(-p) / l.rate;
            } else if constexpr (std::is_same_v<L, HalfNormalPrior>) {
                return l.scale * std_normal_quantile(0.5 * (1.0 + p));
            } else if constexpr (std::is_same_v<L, LevyStablePrior>) {
                return subordinator_quantile(BridgeParams{l.c, l.T}, l.T, p);
            } else if constexpr (std::is_same_v<L, TabulatedPrior>) {
                auto it = std::lower_bound(l.cdf.begin(), l.cdf.end(), p);
                std::size_t i = static_cast<std::size_t>(it - l.cdf.begin());
                if (i == 0) return l.cdf_grid.front();
                if (i >= l.cdf.size()) return l.cdf_grid.back();
                const double c0 = l.cdf[i - 1], c1 = l.cdf[i];
                const double w = c1 > c0 ? (p - c0) / (c1 - c0) : 0.5;
                return l.cdf_grid[i - 1] + w * (l.cdf_grid[i] - l.cdf_grid[i - 1]);
            } else {
                // Bisection on the quadrature distribution function.
                double lo = 0.0, hi = prior_scale_hint(law);
                while (prior_cdf(law, hi) < p) {
                    hi *= 2.0;
                    if (hi > 1e300) throw QuadratureError("prior_quantile: bracket failed", kInf);
                }
                for (int it2 = 0; it2 < 200; ++it2) {
                    double mid = 0.5 * (lo + hi);
                    (prior_cdf(law, mid) < p ? lo : hi) = mid;
                    if (hi - lo <= 1e-12 * std::max(1.0, hi)) break;
                }
                return 0.5 * (lo + hi);
            }
        },
        law);
}

double prior_scale_hint(const PriorLaw& law) {
    return std::visit(
        [](const auto& l) -> double {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, GigPrior>) {
                if (l.gamma > 0.0 && l.delta > 0.0) {
                    // mode of the density, bounded away from zero
                    const double w = l.delta * l.gamma;
                    const double mode =
                        ((l.lambda - 1.0) + std::hypot(l.lambda - 1.0, w)) / (l.gamma * l.gamma);
                    return std::max(mode, l.delta / l.gamma);
                }
                if (l.delta == 0.0) return 2.0 * std::max(l.lambda, 1.0) / (l.gamma * l.gamma);
                return l.delta * l.delta / std::max(1.0, -2.0 * l.lambda); // reciprocal-gamma scale
            } else if constexpr (std::is_same_v<L, GpdPrior>) {
                return std::max(l.mu, l.sigma * std::expm1(l.shape * std::log(2.0)) / l.shape);
            } else if constexpr (std::is_same_v<L, ExponentialPrior>) {
                return 1.0 / l.rate;
            } else if constexpr (std::is_same_v<L, HalfNormalPrior>) {
                return l.scale;
            } else if constexpr (std::is_same_v<L, LevyStablePrior>) {
                const double q = std_normal_quantile(0.75);
                const double r = l.c * l.T / q;
                return r * r;
            } else {
                return 0.25 * (l.grid.back() - l.grid.front()) + 1e-12;
            }
        },
        law);
}

double sample_prior(const PriorLaw& law, CounterRng& rng) {
    if (const auto* l = std::get_if<GigPrior>(&law)) {
        if (l->delta == 0.0) {
            std::gamma_distribution<double> g(l->lambda, 2.0 / (l->gamma * l->gamma));
            return g(rng);
        }
        if (l->gamma == 0.0) {
            std::gamma_distribution<double> g(-l->lambda, 2.0 / (l->delta * l->delta));
            return 1.0 / g(rng);
        }
        if (l->lambda == -0.5) return sample_ig(l->delta / l->gamma, l->delta * l->delta, rng);
        if (l->lambda == 0.5) {
            // reciprocal identity: 1/GIG(1/2,d,g) ~ GIG(-1/2,g,d)
            return 1.0 / sample_ig(l->gamma / l->delta, l->gamma * l->gamma, rng);
        }
        // Ratio-of-uniforms on the two-parameter law h(y) =
        // y^{lambda-1} exp(-omega(y+1/y)/2), X = (delta/gamma) Y.
        // Box: u in (0,1] against h/h(mode), v in (0, vmax] with
        // vmax = m2 sqrt(h(m2)/h(m)) and m2 the mode of y^2 h(y).
        const double omega = l->delta * l->gamma;
        const double beta = l->delta / l->gamma;
        const double lambda = l->lambda;
        auto log_h = [omega, lambda](double y) {
            return (lambda - 1.0) * std::log(y) - 0.5 * omega * (y + 1.0 / y);
        };
        const double lm1 = lambda - 1.0, lp1 = lambda + 1.0;
        const double mode = (lm1 + std::hypot(lm1, omega)) / omega;
        const double m2 = (lp1 + std::hypot(lp1, omega)) / omega;
        const double lhm = log_h(mode);
        const double vmax = m2 * std::exp(0.5 * (log_h(m2) - lhm));
        for (long it = 0; it < 100000000L; ++it) {
            const double u = rng.uniform01();
            const double v = vmax * rng.uniform01();
            const double y = v / u;
            if (2.0 * std::log(u) <= log_h(y) - lhm) return beta * y;
        }
        throw std::runtime_error("sample_prior: GIG rejection stalled");
    }
    if (const auto* l = std::get_if<LevyStablePrior>(&law)) {
        return subordinator_quantile(BridgeParams{l->c, l->T}, l->T, rng.uniform01());
    }
    return prior_quantile(law, rng.uniform01());
}

IntegrationResult integrate_against_range(const PriorLaw& law, const LogIntegrand& integrand,
                                          double lower, double upper) {
    const Support s = prior_support(law);
    const double a = std::max(lower, s.lower);
    const double b = std::min(upper, s.upper);
    if (!(a < b)) return {0.0, 0.0};
    const double offset = a - lower;
    LogIntegrand g = [&](double z, double dz) {
        LogWeighted lw = integrand(z, dz + offset);
        if (lw.sign == 0) return lw;
        const double lp = prior_log_density(law, z);
        if (!std::isfinite(lp)) return LogWeighted{};
        return lw.scaled(lp);
    };
    IntegrationResult r = integrate_log_range(g, a, b, prior_scale_hint(law));
    if (r.error > 1e-6)
        throw QuadratureError("integrate_against: quadrature did not converge", r.error);
    return r;
}

IntegrationResult integrate_against(const PriorLaw& law, const LogIntegrand& integrand,
                                    double lower) {
    return integrate_against_range(law, integrand, lower, kInf);
}

} // namespace srb
