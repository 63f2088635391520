#ifndef HOOPOE_LEVY_HPP
#define HOOPOE_LEVY_HPP

#include <cstddef>
#include <functional>
#include <span>

#include "hoopoe/core.hpp"

namespace hoopoe::levy {

/// Step scale `alpha` (> 0) and tail exponent `lambda` in (1, 3]. The step
/// length law has survival function ~ u^(1 - lambda).
struct LevyParams {
  double alpha = 1.0;
  double lambda = 1.5;

  /// Throws InvalidArgument when alpha <= 0 or lambda is outside (1, 3].
  void validate() const;
  /// Stability index of the symmetric stable law used for the steps.
  double stability() const noexcept { return lambda - 1.0; }
};

/// Source of raw (unscaled) steps. Tests swap in deterministic sources.
using StepSource = std::function<Vector(std::size_t dim, Rng& rng)>;

/// Mantegna's algorithm: u / |v|^(1/beta) with u ~ N(0, sigma_u^2),
/// v ~ N(0, 1) and beta = lambda - 1. For beta = 2 the law is Gaussian
/// with variance 2 and is sampled directly.
Vector sample_step(const LevyParams& params, std::size_t dim, Rng& rng);

/// Mantegna's sigma_u for stability index beta in (0, 2).
double mantegna_sigma(double beta);

/// Per-coordinate displacements are capped at this many domain widths.
inline constexpr double kTruncationWidths = 10.0;

struct Move {
  Vector position;
  /// Number of coordinates whose displacement hit the truncation cap.
  std::size_t truncated = 0;
};

/// repair(current + scale (.) step) with each |scale_i * step_i| capped at
/// kTruncationWidths * width_i. `scale` holds either one entry (applied to
/// every coordinate) or one per coordinate.
Move displace(std::span<const double> current, std::span<const double> scale,
              std::span<const double> step, const Bounds& bounds);

/// One Lévy flight from `current`: draws a step (from `source`, or
/// sample_step when empty) and applies it with scale params.alpha.
Move levy_move(std::span<const double> current, const LevyParams& params, const Bounds& bounds,
               Rng& rng, const StepSource& source = {});

}  // namespace hoopoe::levy

#endif  // HOOPOE_LEVY_HPP
