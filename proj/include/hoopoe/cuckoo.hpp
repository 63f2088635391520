#ifndef HOOPOE_CUCKOO_HPP
#define HOOPOE_CUCKOO_HPP

#include <cstddef>
#include <cstdint>

#include "hoopoe/core.hpp"
#include "hoopoe/hoopoe.hpp"
#include "hoopoe/levy.hpp"
#include "hoopoe/result.hpp"

namespace hoopoe {

enum class CuckooVariant {
  /// Yang's reference code. Cuckoo i steps by
  /// alpha * levy_i * (nest_i - best_i) * N(0,1) and replaces nest i if
  /// better. Then every coordinate is discovered unless a U(0,1) draw falls
  /// at or below p_a (the reference code's convention); a nest with
  /// discovered coordinates moves by U(0,1) * (nest_p - nest_q)
  /// (random permutations p, q) on those coordinates and keeps the move if
  /// it is better. alpha is dimensionless (default 0.01).
  reference,
  /// Textbook description: cuckoo i takes a Lévy flight with alpha in
  /// domain units, replaces a uniformly chosen nest if better, then the
  /// worst ceil(p_a * nests) nests are re-seeded uniformly.
  textbook,
};

struct CuckooConfig {
  std::size_t nests = 25;
  /// Per-coordinate keep probability (reference) or abandoned fraction
  /// (textbook).
  double p_a = 0.25;
  levy::LevyParams levy{0.01, 2.5};
  CuckooVariant variant = CuckooVariant::reference;
  std::uint64_t max_evaluations = 10000;
  double target_value = 0.0;
  double target_tolerance = 1e-3;
  std::uint64_t seed = 0;

  void validate() const;
  double stop_value() const noexcept { return target_value + target_tolerance; }
  /// Nests re-seeded per generation by the textbook variant.
  std::size_t abandoned_per_generation() const noexcept;
};

/// Cuckoo search with the same termination rule and result schema as run().
/// Each generation spends one evaluation per nest plus one per abandoned
/// nest. Only hooks.step_source and hooks.on_evaluation are used.
RunResult cuckoo_run(const CuckooConfig& config, const Objective& objective,
                     const Hooks& hooks = {});

}  // namespace hoopoe

#endif  // HOOPOE_CUCKOO_HPP
