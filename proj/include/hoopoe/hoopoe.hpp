#ifndef HOOPOE_HOOPOE_HPP
#define HOOPOE_HOOPOE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hoopoe/core.hpp"
#include "hoopoe/levy.hpp"
#include "hoopoe/probing.hpp"
#include "hoopoe/result.hpp"

namespace hoopoe {

/// How the probe radius of the current region evolves during intensification.
enum class RadiusPolicy {
  /// Every region is probed at probe.radius.
  fixed,
  /// The region radius contracts after probes that did not lead to a dig.
  /// Once it falls below min_radius_ratio * probe.radius the region is spent
  /// and probing resumes from the best point found at the full radius.
  adaptive,
};

struct HoopoeConfig {
  std::size_t population_size = 25;
  /// Intensify once closed/population exceeds theta.
  double theta = 0.2;
  levy::LevyParams levy{1.0, 2.5};
  probing::ProbeParams probe{};
  RadiusPolicy radius_policy = RadiusPolicy::adaptive;
  /// Region radius multiplier after a probe step without a dig.
  double region_contraction = 0.8;
  double min_radius_ratio = 1e-4;
  std::uint64_t max_evaluations = 10000;
  double target_value = 0.0;
  double target_tolerance = 1e-3;
  std::uint64_t seed = 0;

  void validate() const;
  double stop_value() const noexcept { return target_value + target_tolerance; }

  /// Defaults scaled to a domain: alpha = 0.01 * width, r = 0.1 * width,
  /// dig budget 20 * dim.
  static HoopoeConfig defaults_for(const Bounds& bounds);
};

/// Test hooks replacing the random step and probe-point generators.
struct Hooks {
  levy::StepSource step_source;
  probing::PointSource point_source;
  Evaluator::Observer on_evaluation;
  /// Called with the archive (or the nests) after every step or generation.
  std::function<void(std::span<const Candidate>)> on_population;
};

/// Archive slot of the current region plus the radius it is probed at.
struct RegionHandle {
  std::size_t index = 0;
  double radius = 0.0;

  friend bool operator==(const RegionHandle&, const RegionHandle&) = default;
};

struct HoopoeState {
  std::vector<Candidate> population;
  std::vector<bool> closed;
  std::size_t closed_count = 0;
  RegionHandle current;
  Candidate best;
  std::uint64_t evaluations = 0;
  std::uint64_t iteration = 0;
  std::optional<std::uint64_t> mode_switch_iteration;
  std::vector<TraceRecord> trace;
  std::uint64_t truncated_steps = 0;
  bool terminated = false;
  Rng rng{0};

  double best_value() const noexcept { return best.value; }
};

/// Evaluate a uniform archive, pick the starting region uniformly.
HoopoeState initialize(const HoopoeConfig& config, const Objective& objective,
                       const Hooks& hooks = {});

inline bool should_intensify(const HoopoeState& state, const HoopoeConfig& config) noexcept {
  return static_cast<double>(state.closed_count) / static_cast<double>(state.population.size()) >
         config.theta;
}

/// Close the current region, then either probe (and possibly dig) around it
/// or take one Lévy flight from it. The new point replaces the worst archive
/// member and becomes the next region. No-op once the run has terminated.
void step(HoopoeState& state, const HoopoeConfig& config, const Objective& objective,
          const Hooks& hooks = {});

/// Step until the budget is spent or best <= target + tolerance.
RunResult run(const HoopoeConfig& config, const Objective& objective, const Hooks& hooks = {});

}  // namespace hoopoe

#endif  // HOOPOE_HOOPOE_HPP
