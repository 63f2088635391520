#include "hoopoe/core.hpp"

#include <boost/random/uniform_int_distribution.hpp>

#include <algorithm>
#include <cmath>

namespace hoopoe {

Bounds::Bounds(Vector lower, Vector upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw InvalidArgument("bounds: dimension must be positive");
  if (lower_.size() != upper_.size())
    throw InvalidArgument("bounds: lower has " + std::to_string(lower_.size()) +
                          " entries, upper has " + std::to_string(upper_.size()));
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!(lower_[i] < upper_[i]) || !std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      throw InvalidArgument("bounds: need finite lower < upper in dimension " + std::to_string(i));
  }
}

Bounds Bounds::cube(std::size_t dim, double lo, double hi) {
  return Bounds(Vector(dim, lo), Vector(dim, hi));
}

double Bounds::max_width() const noexcept {
  double w = 0.0;
  for (std::size_t i = 0; i < lower_.size(); ++i) w = std::max(w, upper_[i] - lower_[i]);
  return w;
}

bool Bounds::contains(std::span<const double> x) const noexcept {
  if (x.size() != lower_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) return false;
  return true;
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw InvalidArgument("rng: cannot draw an index from an empty range");
  return boost::random::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

Vector repair(std::span<const double> position, const Bounds& bounds) {
  if (position.size() != bounds.dim())
    throw InvalidArgument("repair: position has dimension " + std::to_string(position.size()) +
                          ", bounds have " + std::to_string(bounds.dim()));
  Vector out(position.begin(), position.end());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::clamp(out[i], bounds.lower()[i], bounds.upper()[i]);
  return out;
}

Vector uniform_point(const Bounds& bounds, Rng& rng) {
  Vector x(bounds.dim());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(bounds.lower()[i], bounds.upper()[i]);
  return x;
}

Evaluator::Evaluator(const Objective& objective, std::uint64_t max_evaluations, double stop_value)
    : objective_(&objective), max_evaluations_(max_evaluations), stop_value_(stop_value) {
  if (!objective.evaluate) throw InvalidArgument("evaluator: objective has no evaluate function");
}

Evaluator::Evaluator(const Objective& objective, std::uint64_t max_evaluations, double stop_value,
                     std::uint64_t count, Candidate best)
    : Evaluator(objective, max_evaluations, stop_value) {
  count_ = count;
  best_ = std::move(best);
}

std::optional<Candidate> Evaluator::evaluate(std::span<const double> position) {
  if (halted()) return std::nullopt;
  if (position.size() != bounds().dim())
    throw InvalidArgument("evaluate: position has dimension " + std::to_string(position.size()) +
                          ", objective expects " + std::to_string(bounds().dim()));
  Candidate c{Vector(position.begin(), position.end()), objective_->evaluate(position), ++count_};
  if (c.value < best_.value || best_.eval_index == 0) best_ = c;
  if (observer_) observer_(c);
  return c;
}

}  // namespace hoopoe
