#ifndef HOOPOE_RESULT_HPP
#define HOOPOE_RESULT_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hoopoe/core.hpp"

namespace hoopoe {

enum class Mode { init, diversify, probe, dig };

std::string_view to_string(Mode m) noexcept;
/// Inverse of to_string; throws InvalidArgument on anything else.
Mode parse_mode(std::string_view s);

/// One row of a run trace, in fixed field order.
struct TraceRecord {
  std::uint64_t iteration = 0;
  std::uint64_t evaluations = 0;
  double best_value = 0.0;
  Mode mode = Mode::init;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Outcome of one seeded run; shared by every algorithm in the library.
struct RunResult {
  Candidate best;
  std::uint64_t evaluations_used = 0;
  bool success = false;
  std::optional<std::uint64_t> mode_switch_iteration;
  std::vector<TraceRecord> trace;
  std::uint64_t seed = 0;
  /// Lévy displacements that hit the truncation cap during the run.
  std::uint64_t truncated_steps = 0;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

}  // namespace hoopoe

#endif  // HOOPOE_RESULT_HPP
