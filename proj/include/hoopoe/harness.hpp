#ifndef HOOPOE_HARNESS_HPP
#define HOOPOE_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hoopoe/benchfns.hpp"
#include "hoopoe/cuckoo.hpp"
#include "hoopoe/hoopoe.hpp"
#include "hoopoe/result.hpp"

namespace hoopoe::harness {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algorithm { hoopoe, cuckoo };

std::string_view to_string(Algorithm a) noexcept;
Algorithm parse_algorithm(std::string_view s);

using AlgorithmConfig = std::variant<HoopoeConfig, CuckooConfig>;

/// Repeated seeded runs of one algorithm on one registered function. Run i
/// uses seed base_seed + i; target_value is the function's optimum and
/// target_tolerance is success_tolerance (both override the config).
struct ExperimentSpec {
  std::string function;
  std::size_t dim = 2;
  std::size_t runs = 1;
  std::uint64_t base_seed = 0;
  AlgorithmConfig config;
  double success_tolerance = 1e-3;
  /// Worker threads; 0 picks the hardware concurrency.
  std::size_t threads = 0;

  Algorithm algorithm() const noexcept;
};

struct RunRecord {
  std::uint64_t seed = 0;
  bool success = false;
  double best_value = 0.0;
  std::uint64_t evaluations = 0;
  std::optional<std::uint64_t> mode_switch_iteration;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord make_record(const RunResult& r);

/// Aggregates over one experiment. Evaluation statistics cover successful
/// runs only (failed runs are censored at the budget); they are NaN when no
/// run succeeded.
struct ExperimentSummary {
  std::string function;
  std::size_t dim = 0;
  Algorithm algorithm = Algorithm::hoopoe;
  std::uint64_t base_seed = 0;
  std::uint64_t budget = 0;
  double tolerance = 0.0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double success_rate = 0.0;
  double mean_evaluations = 0.0;
  /// Sample standard deviation (n - 1).
  double std_evaluations = 0.0;
  double min_evaluations = 0.0;
  double median_evaluations = 0.0;
  double max_evaluations = 0.0;
  std::vector<RunRecord> records;
};

/// Fill the aggregate fields from `records` (sorted by seed first).
void summarize(ExperimentSummary& summary);

ExperimentSummary run_experiment(const ExperimentSpec& spec);

struct ComparisonReport {
  std::string function;
  std::size_t dim = 0;
  Algorithm first = Algorithm::hoopoe;
  Algorithm second = Algorithm::cuckoo;
  /// mean_evaluations(first) - mean_evaluations(second).
  double mean_delta = 0.0;
  bool first_earlier = false;
  /// Per-seed pairing: success beats failure, then fewer evaluations win.
  std::size_t first_wins = 0;
  std::size_t second_wins = 0;
  std::size_t ties = 0;
};

/// Throws InvalidArgument unless both summaries share function, dim, budget,
/// tolerance and seed schedule.
ComparisonReport compare(const ExperimentSummary& first, const ExperimentSummary& second);

/// Real numbers are written with 17 significant digits.
std::string format_real(double v);

std::string summary_csv(const ExperimentSummary& summary);
void emit_csv(const ExperimentSummary& summary, const std::filesystem::path& path);
/// Inverse of summary_csv.
ExperimentSummary parse_summary_csv(std::string_view text);

std::string trace_csv(const RunResult& result);
void emit_trace(const RunResult& result, const std::filesystem::path& path);

/// Optional overrides on top of the per-function defaults.
struct Overrides {
  std::optional<double> theta;
  std::optional<std::size_t> population;
  std::optional<double> radius;
  std::optional<std::size_t> probes;
  std::optional<double> dig_threshold;
  std::optional<std::uint64_t> dig_budget;
  std::optional<double> shrink;
  std::optional<RadiusPolicy> radius_policy;
  std::optional<double> contraction;
  std::optional<double> min_radius_ratio;
  std::optional<double> alpha;
  std::optional<double> lambda;
  std::optional<double> p_a;
  std::optional<std::size_t> nests;
  std::optional<CuckooVariant> cuckoo_variant;
};

HoopoeConfig make_hoopoe_config(const bench::BenchmarkSpec& bench, std::uint64_t budget,
                                const Overrides& o = {});
CuckooConfig make_cuckoo_config(const bench::BenchmarkSpec& bench, std::uint64_t budget,
                                const Overrides& o = {});

struct ProtocolCase {
  std::string function;
  std::size_t dim;
};

/// Desk-scale suite: De Jong 8, Rastrigin 4, Ackley 8, Rosenbrock 4.
std::vector<ProtocolCase> desk_protocol();
/// Full suite: De Jong 32, Rosenbrock 16, Ackley 128, Rastrigin 16.
std::vector<ProtocolCase> full_protocol();

struct ProtocolRow {
  ExperimentSummary hoopoe;
  ExperimentSummary cuckoo;
  ComparisonReport comparison;
};

/// Both algorithms on every case with paired seeds.
std::vector<ProtocolRow> run_protocol(const std::vector<ProtocolCase>& cases, std::size_t runs,
                                      std::uint64_t base_seed, std::uint64_t budget,
                                      double tolerance, const Overrides& o = {},
                                      std::size_t threads = 0);

/// One row per case: success rates, mean/std evaluations, the "mean(rate%)"
/// cell for each algorithm, and the paired comparison.
std::string table_csv(const std::vector<ProtocolRow>& rows);
void emit_table(const std::vector<ProtocolRow>& rows, const std::filesystem::path& path);

/// Command-line entry point; returns the process exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace hoopoe::harness

#endif  // HOOPOE_HARNESS_HPP
