#include "hoopoe/levy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hoopoe::levy {

void LevyParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw InvalidArgument("levy: alpha must be positive, got " + std::to_string(alpha));
  if (!(lambda > 1.0 && lambda <= 3.0))
    throw InvalidArgument("levy: lambda must lie in (1, 3], got " + std::to_string(lambda));
}

double mantegna_sigma(double beta) {
  const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / beta);
}

Vector sample_step(const LevyParams& params, std::size_t dim, Rng& rng) {
  params.validate();
  const double beta = params.stability();
  Vector step(dim);
  if (beta >= 2.0) {
    // sin(pi) = 0 zeroes Mantegna's sigma; S(2) is N(0, 2).
    for (auto& s : step) s = std::numbers::sqrt2 * rng.normal();
    return step;
  }
  const double sigma_u = mantegna_sigma(beta);
  for (auto& s : step) {
    const double u = sigma_u * rng.normal();
    const double v = rng.normal();
    s = u / std::pow(std::abs(v), 1.0 / beta);
  }
  return step;
}

Move displace(std::span<const double> current, std::span<const double> scale,
              std::span<const double> step, const Bounds& bounds) {
  const std::size_t n = bounds.dim();
  if (current.size() != n || step.size() != n)
    throw InvalidArgument("levy: position/step dimension does not match bounds (" +
                          std::to_string(current.size()) + "/" + std::to_string(step.size()) +
                          " vs " + std::to_string(n) + ")");
  if (scale.size() != 1 && scale.size() != n)
    throw InvalidArgument("levy: scale must have 1 or " + std::to_string(n) + " entries");
  Move m{Vector(current.begin(), current.end()), 0};
  for (std::size_t i = 0; i < n; ++i) {
    const double cap = kTruncationWidths * bounds.width(i);
    double d = scale[scale.size() == 1 ? 0 : i] * step[i];
    // NaN can appear when v underflows to 0 and u is 0 as well.
    if (std::isnan(d)) d = 0.0;
    if (std::abs(d) > cap) {
      d = std::copysign(cap, d);
      ++m.truncated;
    }
    m.position[i] += d;
  }
  m.position = repair(m.position, bounds);
  return m;
}

Move levy_move(std::span<const double> current, const LevyParams& params, const Bounds& bounds,
               Rng& rng, const StepSource& source) {
  params.validate();
  if (current.size() != bounds.dim())
    throw InvalidArgument("levy_move: position has dimension " + std::to_string(current.size()) +
                          ", bounds have " + std::to_string(bounds.dim()));
  const Vector step = source ? source(bounds.dim(), rng) : sample_step(params, bounds.dim(), rng);
  const double scale[] = {params.alpha};
  return displace(current, scale, step, bounds);
}

}  // namespace hoopoe::levy
