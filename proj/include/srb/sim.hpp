#pragma once

#include "srb/lrb.hpp"
#include "srb/timechange.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace srb {

/// Dyadic-bisection ensemble of paid-claims paths. Values are cumulative
/// levels on the grid `times` (2^depth + 1 points), stored row-major per
/// path. Generation is keyed by (seed, path, level, position) counter
/// streams, so the ensemble is identical under any execution order.
struct PathEnsemble {
    int depth = 0;
    std::uint64_t seed = 0;
    std::size_t count = 0;
    std::vector<double> times;
    std::vector<double> values;

    std::size_t steps() const { return times.size(); }
    double at(std::size_t path, std::size_t idx) const { return values[path * steps() + idx]; }

    /// Per-time quantiles across paths (probabilities in (0,1)).
    std::vector<std::vector<double>> quantile_fan(const std::vector<double>& probs) const;

    void write_csv(std::ostream& os) const;
    /// Little-endian layout [count:u64][depth:u64][seed:u64][values:f64 row-major].
    void write_binary(std::ostream& os) const;
};

/// Recursive dyadic simulation: draw the terminal from the prior, then fill
/// midpoints level by level.
PathEnsemble simulate_paths(const BridgeParams& params, const PriorLaw& prior, int depth,
                            std::size_t count, std::uint64_t seed);

/// Remaining development on [s,T] given an observation: terminal drawn from
/// the posterior (tabulated inverse distribution function), then bisection.
/// The trivial anchor reduces to simulate_paths.
PathEnsemble simulate_conditional(const BridgeParams& params, const ConditionalLaw& law, int depth,
                                  std::size_t count, std::uint64_t seed);

/// Time-changed ensemble: dyadic in operational time, reported against the
/// physical times tau^{-1}(grid).
PathEnsemble simulate_timechanged(const TimechangedModel& model, int depth, std::size_t count,
                                  std::uint64_t seed);

} // namespace srb
