#ifndef HOOPOE_BENCHFNS_HPP
#define HOOPOE_BENCHFNS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hoopoe/core.hpp"

namespace hoopoe::bench {

// The four standard test functions. All have global minimum 0.

/// Sum of squares. Minimum at the origin.
double de_jong(std::span<const double> x);

/// Extended Rosenbrock valley; needs at least two coordinates.
/// Minimum at (1, ..., 1).
double rosenbrock(std::span<const double> x);

/// Generalized Ackley with a = 20, b = 0.2, c = 2*pi.
double ackley(std::span<const double> x);

/// Generalized Rastrigin with A = 10.
double rastrigin(std::span<const double> x);

struct BenchmarkSpec {
  std::string name;
  Objective objective;
  std::size_t default_dim;
  Vector optimum_position;
  double optimum_value;

  const Bounds& bounds() const noexcept { return objective.bounds; }
  std::size_t dim() const noexcept { return objective.bounds.dim(); }
};

/// Names accepted by registry(), in registration order.
const std::vector<std::string>& available();

/// Look up a registered function. `dim` overrides the default dimension
/// (De Jong 32, Rosenbrock 16, Ackley 128, Rastrigin 16). Throws
/// InvalidArgument naming the available functions on an unknown name.
BenchmarkSpec registry(std::string_view name, std::optional<std::size_t> dim = std::nullopt);

}  // namespace hoopoe::bench

#endif  // HOOPOE_BENCHFNS_HPP
