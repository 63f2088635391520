#ifndef HOOPOE_PROBING_HPP
#define HOOPOE_PROBING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hoopoe/core.hpp"

namespace hoopoe::probing {

struct ProbeParams {
  /// Probe ball radius r.
  double radius = 1.0;
  /// Probes k drawn per region.
  std::size_t probes_per_region = 10;
  /// Dig when the success probability is strictly above this.
  double dig_threshold = 0.3;
  /// Evaluations a single dig may spend.
  std::uint64_t dig_budget = 0;
  /// Radius contraction per dig round, in (0, 1).
  double shrink_factor = 0.5;

  void validate() const;
};

struct ProbeReport {
  Candidate center;
  std::vector<Candidate> samples;
  /// Fraction of the k requested probes that strictly improved on center.
  double success_probability = 0.0;
  Candidate best_sample;
  /// True when the evaluation budget ran out before all k probes were made.
  bool budget_exhausted = false;
};

/// Produces raw (pre-repair) probe points around a center. The default draws
/// `count` points uniformly from the closed ball; tests inject exhaustive grids.
using PointSource =
    std::function<std::vector<Vector>(std::span<const double> center, double radius,
                                      std::size_t count, Rng& rng)>;

/// Uniform point in the closed Euclidean ball of `radius` around `center`.
Vector sample_ball(std::span<const double> center, double radius, Rng& rng);

/// Evaluate k neighbors of `center` (k = params.probes_per_region unless the
/// source returns a different count) and measure how many improve on it.
ProbeReport probe_region(const Candidate& center, const ProbeParams& params, Evaluator& evaluator,
                         Rng& rng, const PointSource& source = {});

struct DigResult {
  Candidate best;
  std::size_t rounds = 0;
  std::uint64_t evaluations = 0;
  /// Radius of the last round that improved; 0 if none did.
  double last_improving_radius = 0.0;
};

/// Contracting local search: probe at the current radius, move to the best
/// improving sample, shrink the radius. Stops when dig_budget evaluations are
/// spent, the evaluator halts, or a round brings no improvement. The result
/// is never worse than `center`.
DigResult dig(const Candidate& center, const ProbeParams& params, Evaluator& evaluator, Rng& rng,
              const PointSource& source = {});

inline bool should_dig(const ProbeReport& report, const ProbeParams& params) noexcept {
  return report.success_probability > params.dig_threshold;
}

}  // namespace hoopoe::probing

#endif  // HOOPOE_PROBING_HPP
