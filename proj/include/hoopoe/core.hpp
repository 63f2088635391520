#ifndef HOOPOE_CORE_HPP
#define HOOPOE_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>

namespace hoopoe {

using Vector = std::vector<double>;

/// Raised when an operation receives structurally invalid input
/// (wrong dimension, empty vector, out-of-range parameter).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Box constraints. Construction validates lower[i] < upper[i].
class Bounds {
 public:
  Bounds(Vector lower, Vector upper);

  /// Hypercube [lo, hi]^dim.
  static Bounds cube(std::size_t dim, double lo, double hi);

  std::size_t dim() const noexcept { return lower_.size(); }
  const Vector& lower() const noexcept { return lower_; }
  const Vector& upper() const noexcept { return upper_; }
  double width(std::size_t i) const { return upper_.at(i) - lower_.at(i); }
  double max_width() const noexcept;
  bool contains(std::span<const double> x) const noexcept;

  friend bool operator==(const Bounds&, const Bounds&) = default;

 private:
  Vector lower_;
  Vector upper_;
};

/// A point with its objective value and the evaluation index at which it was
/// produced (1-based; 0 means "never evaluated").
struct Candidate {
  Vector position;
  double value = std::numeric_limits<double>::infinity();
  std::uint64_t eval_index = 0;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Minimization objective over a box.
struct Objective {
  std::string name;
  std::function<double(std::span<const double>)> evaluate;
  Bounds bounds;
  std::optional<double> known_optimum_value;
};

/// Seeded random stream. Two instances constructed with the same seed emit
/// identical sequences for the same call sequence. The Boost distributions
/// keep streams identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }
  double normal() { return normal_(engine_); }
  /// Uniform index in [0, n).
  std::size_t index(std::size_t n);
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  boost::random::uniform_01<double> unit_;
  boost::random::normal_distribution<double> normal_{0.0, 1.0};
  std::uint64_t seed_;
};

/// Clamp every coordinate into the box.
Vector repair(std::span<const double> position, const Bounds& bounds);

Vector uniform_point(const Bounds& bounds, Rng& rng);

/// Counts objective evaluations against a hard budget and tracks the best
/// candidate seen. Once the budget is spent, or a value at or below
/// `stop_value` has been produced, further calls return std::nullopt.
class Evaluator {
 public:
  using Observer = std::function<void(const Candidate&)>;

  Evaluator(const Objective& objective, std::uint64_t max_evaluations,
            double stop_value = -std::numeric_limits<double>::infinity());
  /// Resume counting from an earlier evaluator's count and best.
  Evaluator(const Objective& objective, std::uint64_t max_evaluations, double stop_value,
            std::uint64_t count, Candidate best);

  /// Called with every candidate produced, in evaluation order.
  void set_observer(Observer observer) { observer_ = std::move(observer); }

  std::optional<Candidate> evaluate(std::span<const double> position);

  const Objective& objective() const noexcept { return *objective_; }
  const Bounds& bounds() const noexcept { return objective_->bounds; }
  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t max_evaluations() const noexcept { return max_evaluations_; }
  std::uint64_t remaining() const noexcept { return max_evaluations_ - count_; }
  bool target_reached() const noexcept { return best_.value <= stop_value_; }
  bool halted() const noexcept { return count_ >= max_evaluations_ || target_reached(); }
  const Candidate& best() const noexcept { return best_; }

 private:
  const Objective* objective_;
  std::uint64_t max_evaluations_;
  double stop_value_;
  std::uint64_t count_ = 0;
  Candidate best_;
  Observer observer_;
};

}  // namespace hoopoe

#endif  // HOOPOE_CORE_HPP
