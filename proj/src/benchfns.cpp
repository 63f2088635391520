#include "hoopoe/benchfns.hpp"

#include <cmath>
#include <numbers>

namespace hoopoe::bench {
namespace {

void require_nonempty(std::span<const double> x, const char* fn) {
  if (x.empty()) throw InvalidArgument(std::string(fn) + ": input vector is empty");
}

struct Entry {
  const char* name;
  double (*fn)(std::span<const double>);
  std::size_t default_dim;
  double lo;
  double hi;
  double optimum_coordinate;
  std::size_t min_dim;
};

// Box domains are the customary ones for each function.
constexpr Entry kEntries[] = {
    {"dejong", &de_jong, 32, -5.12, 5.12, 0.0, 1},
    {"rosenbrock", &rosenbrock, 16, -5.0, 10.0, 1.0, 2},
    {"ackley", &ackley, 128, -32.768, 32.768, 0.0, 1},
    {"rastrigin", &rastrigin, 16, -5.12, 5.12, 0.0, 1},
};

}  // namespace

double de_jong(std::span<const double> x) {
  require_nonempty(x, "de_jong");
  double s = 0.0;
  for (double xi : x) s += xi * xi;
  return s;
}

double rosenbrock(std::span<const double> x) {
  if (x.size() < 2) throw InvalidArgument("rosenbrock: needs at least 2 coordinates");
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i] * x[i] - x[i + 1];
    const double b = 1.0 - x[i];
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double ackley(std::span<const double> x) {
  require_nonempty(x, "ackley");
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double xi : x) {
    sq += xi * xi;
    cs += std::cos(2.0 * std::numbers::pi * xi);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double rastrigin(std::span<const double> x) {
  require_nonempty(x, "rastrigin");
  double s = 10.0 * static_cast<double>(x.size());
  for (double xi : x) s += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
  return s;
}

const std::vector<std::string>& available() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kEntries) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

BenchmarkSpec registry(std::string_view name, std::optional<std::size_t> dim) {
  for (const auto& e : kEntries) {
    if (name != e.name) continue;
    const std::size_t n = dim.value_or(e.default_dim);
    if (n < e.min_dim)
      throw InvalidArgument(std::string(e.name) + ": dimension " + std::to_string(n) +
                            " is below the minimum of " + std::to_string(e.min_dim));
    Objective obj{e.name, e.fn, Bounds::cube(n, e.lo, e.hi), 0.0};
    return BenchmarkSpec{e.name, std::move(obj), e.default_dim, Vector(n, e.optimum_coordinate), 0.0};
  }
  std::string msg = "unknown function '" + std::string(name) + "'; available:";
  for (const auto& n : available()) msg += " " + n;
  throw InvalidArgument(msg);
}

}  // namespace hoopoe::bench
