#include "hoopoe/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace hoopoe::harness {
namespace {

constexpr std::string_view kSummaryHeader =
    "seed,success,best_value,evaluations,mode_switch_iteration";
constexpr std::string_view kTraceHeader = "iteration,evaluations,best_value,mode";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T v{};
  if (s == "nan" && std::is_floating_point_v<T>) return std::numeric_limits<T>::quiet_NaN();
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("csv: bad " + std::string(what) + " field '" + std::string(s) + "'");
  return v;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

bool same_real(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::hoopoe ? "hoopoe" : "cuckoo";
}

Algorithm parse_algorithm(std::string_view s) {
  if (s == "hoopoe") return Algorithm::hoopoe;
  if (s == "cuckoo") return Algorithm::cuckoo;
  throw InvalidArgument("unknown algorithm '" + std::string(s) + "' (expected hoopoe or cuckoo)");
}

Algorithm ExperimentSpec::algorithm() const noexcept {
  return std::holds_alternative<HoopoeConfig>(config) ? Algorithm::hoopoe : Algorithm::cuckoo;
}

RunRecord make_record(const RunResult& r) {
  return {r.seed, r.success, r.best.value, r.evaluations_used, r.mode_switch_iteration};
}

void summarize(ExperimentSummary& s) {
  std::sort(s.records.begin(), s.records.end(),
            [](const RunRecord& a, const RunRecord& b) { return a.seed < b.seed; });
  s.runs = s.records.size();
  std::vector<double> evals;
  for (const auto& r : s.records)
    if (r.success) evals.push_back(static_cast<double>(r.evaluations));
  s.successes = evals.size();
  s.success_rate = s.runs == 0 ? 0.0 : static_cast<double>(s.successes) / static_cast<double>(s.runs);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (evals.empty()) {
    s.mean_evaluations = s.std_evaluations = s.min_evaluations = s.median_evaluations =
        s.max_evaluations = nan;
    return;
  }
  std::sort(evals.begin(), evals.end());
  double sum = 0.0;
  for (double e : evals) sum += e;
  s.mean_evaluations = sum / static_cast<double>(evals.size());
  double ss = 0.0;
  for (double e : evals) ss += (e - s.mean_evaluations) * (e - s.mean_evaluations);
  s.std_evaluations = evals.size() > 1 ? std::sqrt(ss / static_cast<double>(evals.size() - 1)) : 0.0;
  s.min_evaluations = evals.front();
  s.max_evaluations = evals.back();
  const std::size_t m = evals.size() / 2;
  s.median_evaluations = evals.size() % 2 ? evals[m] : 0.5 * (evals[m - 1] + evals[m]);
}

ExperimentSummary run_experiment(const ExperimentSpec& spec) {
  if (spec.runs == 0) throw InvalidArgument("experiment: runs must be at least 1");
  if (!(spec.success_tolerance > 0.0))
    throw InvalidArgument("experiment: success tolerance must be positive");
  const bench::BenchmarkSpec bench = bench::registry(spec.function, spec.dim);

  // Validate once before launching any run.
  AlgorithmConfig base = spec.config;
  std::uint64_t budget = 0;
  std::visit(
      [&](auto& c) {
        c.target_value = bench.optimum_value;
        c.target_tolerance = spec.success_tolerance;
        c.validate();
        budget = c.max_evaluations;
      },
      base);

  std::vector<RunResult> results(spec.runs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < spec.runs; i = next++) {
      std::visit(
          [&](auto c) {
            c.seed = spec.base_seed + i;
            if constexpr (std::is_same_v<decltype(c), HoopoeConfig>)
              results[i] = run(c, bench.objective);
            else
              results[i] = cuckoo_run(c, bench.objective);
          },
          base);
    }
  };
  std::size_t threads = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, spec.runs);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ExperimentSummary s;
  s.function = bench.name;
  s.dim = bench.dim();
  s.algorithm = spec.algorithm();
  s.base_seed = spec.base_seed;
  s.budget = budget;
  s.tolerance = spec.success_tolerance;
  for (const auto& r : results) s.records.push_back(make_record(r));
  summarize(s);
  return s;
}

ComparisonReport compare(const ExperimentSummary& a, const ExperimentSummary& b) {
  if (a.function != b.function || a.dim != b.dim)
    throw InvalidArgument("compare: summaries are for different problems (" + a.function + "/" +
                          std::to_string(a.dim) + " vs " + b.function + "/" +
                          std::to_string(b.dim) + ")");
  if (a.budget != b.budget || a.tolerance != b.tolerance)
    throw InvalidArgument("compare: summaries use different budgets or tolerances");
  if (a.base_seed != b.base_seed || a.records.size() != b.records.size())
    throw InvalidArgument("compare: summaries do not share a seed schedule");

  ComparisonReport rep;
  rep.function = a.function;
  rep.dim = a.dim;
  rep.first = a.algorithm;
  rep.second = b.algorithm;
  rep.mean_delta = a.mean_evaluations - b.mean_evaluations;
  rep.first_earlier = rep.mean_delta < 0.0;
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const RunRecord& x = a.records[i];
    const RunRecord& y = b.records[i];
    if (x.seed != y.seed) throw InvalidArgument("compare: run seeds are not paired");
    if (x.success != y.success) {
      ++(x.success ? rep.first_wins : rep.second_wins);
    } else if (!x.success || x.evaluations == y.evaluations) {
      ++rep.ties;
    } else {
      ++(x.evaluations < y.evaluations ? rep.first_wins : rep.second_wins);
    }
  }
  return rep;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

std::string summary_csv(const ExperimentSummary& s) {
  std::ostringstream out;
  out << kSummaryHeader << '\n';
  for (const auto& r : s.records) {
    out << r.seed << ',' << (r.success ? 1 : 0) << ',' << format_real(r.best_value) << ','
        << r.evaluations << ',';
    if (r.mode_switch_iteration) out << *r.mode_switch_iteration;
    out << '\n';
  }
  out << "summary,function=" << s.function << ",dim=" << s.dim
      << ",algorithm=" << to_string(s.algorithm) << ",base_seed=" << s.base_seed
      << ",budget=" << s.budget << ",tolerance=" << format_real(s.tolerance) << ",runs=" << s.runs
      << ",successes=" << s.successes << ",success_rate=" << format_real(s.success_rate)
      << ",mean_evaluations=" << format_real(s.mean_evaluations)
      << ",std_evaluations=" << format_real(s.std_evaluations)
      << ",min_evaluations=" << format_real(s.min_evaluations)
      << ",median_evaluations=" << format_real(s.median_evaluations)
      << ",max_evaluations=" << format_real(s.max_evaluations) << '\n';
  return out.str();
}

void emit_csv(const ExperimentSummary& summary, const std::filesystem::path& path) {
  write_file(path, summary_csv(summary));
}

ExperimentSummary parse_summary_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (auto l : split(text, '\n'))
    if (!l.empty()) lines.push_back(l);
  if (lines.size() < 2 || lines.front() != kSummaryHeader)
    throw InvalidArgument("csv: missing summary header");

  ExperimentSummary s;
  for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 5) throw InvalidArgument("csv: run row needs 5 fields");
    RunRecord r;
    r.seed = parse_number<std::uint64_t>(f[0], "seed");
    if (f[1] != "0" && f[1] != "1") throw InvalidArgument("csv: success must be 0 or 1");
    r.success = f[1] == "1";
    r.best_value = parse_number<double>(f[2], "best_value");
    r.evaluations = parse_number<std::uint64_t>(f[3], "evaluations");
    if (!f[4].empty()) r.mode_switch_iteration = parse_number<std::uint64_t>(f[4], "mode switch");
    s.records.push_back(r);
  }

  const auto footer = split(lines.back(), ',');
  if (footer.empty() || footer[0] != "summary") throw InvalidArgument("csv: missing summary footer");
  std::map<std::string_view, std::string_view> kv;
  for (std::size_t i = 1; i < footer.size(); ++i) {
    const auto eq = footer[i].find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("csv: malformed footer field");
    kv[footer[i].substr(0, eq)] = footer[i].substr(eq + 1);
  }
  auto get = [&](std::string_view key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw InvalidArgument("csv: footer lacks '" + std::string(key) + "'");
    return it->second;
  };
  s.function = std::string(get("function"));
  s.dim = parse_number<std::size_t>(get("dim"), "dim");
  s.algorithm = parse_algorithm(get("algorithm"));
  s.base_seed = parse_number<std::uint64_t>(get("base_seed"), "base_seed");
  s.budget = parse_number<std::uint64_t>(get("budget"), "budget");
  s.tolerance = parse_number<double>(get("tolerance"), "tolerance");

  ExperimentSummary recomputed = s;
  summarize(recomputed);
  const double footer_rate = parse_number<double>(get("success_rate"), "success_rate");
  const double footer_mean = parse_number<double>(get("mean_evaluations"), "mean_evaluations");
  if (parse_number<std::size_t>(get("runs"), "runs") != recomputed.runs ||
      parse_number<std::size_t>(get("successes"), "successes") != recomputed.successes ||
      !same_real(footer_rate, recomputed.success_rate) ||
      !same_real(footer_mean, recomputed.mean_evaluations))
    throw InvalidArgument("csv: footer does not match the run rows");
  recomputed.std_evaluations = parse_number<double>(get("std_evaluations"), "std_evaluations");
  return recomputed;
}

std::string trace_csv(const RunResult& result) {
  std::ostringstream out;
  out << kTraceHeader << '\n';
  for (const auto& t : result.trace)
    out << t.iteration << ',' << t.evaluations << ',' << format_real(t.best_value) << ','
        << to_string(t.mode) << '\n';
  return out.str();
}

void emit_trace(const RunResult& result, const std::filesystem::path& path) {
  write_file(path, trace_csv(result));
}

HoopoeConfig make_hoopoe_config(const bench::BenchmarkSpec& bench, std::uint64_t budget,
                                const Overrides& o) {
  HoopoeConfig c = HoopoeConfig::defaults_for(bench.bounds());
  c.max_evaluations = budget;
  c.target_value = bench.optimum_value;
  if (o.theta) c.theta = *o.theta;
  if (o.population) c.population_size = *o.population;
  if (o.radius) c.probe.radius = *o.radius;
  if (o.probes) c.probe.probes_per_region = *o.probes;
  if (o.dig_threshold) c.probe.dig_threshold = *o.dig_threshold;
  if (o.dig_budget) c.probe.dig_budget = *o.dig_budget;
  if (o.shrink) c.probe.shrink_factor = *o.shrink;
  if (o.radius_policy) c.radius_policy = *o.radius_policy;
  if (o.contraction) c.region_contraction = *o.contraction;
  if (o.min_radius_ratio) c.min_radius_ratio = *o.min_radius_ratio;
  if (o.alpha) c.levy.alpha = *o.alpha;
  if (o.lambda) c.levy.lambda = *o.lambda;
  return c;
}

CuckooConfig make_cuckoo_config(const bench::BenchmarkSpec& bench, std::uint64_t budget,
                                const Overrides& o) {
  CuckooConfig c;
  c.max_evaluations = budget;
  c.target_value = bench.optimum_value;
  if (o.p_a) c.p_a = *o.p_a;
  if (o.nests) c.nests = *o.nests;
  if (o.cuckoo_variant) c.variant = *o.cuckoo_variant;
  if (o.alpha) c.levy.alpha = *o.alpha;
  if (o.lambda) c.levy.lambda = *o.lambda;
  return c;
}

std::vector<ProtocolCase> desk_protocol() {
  return {{"dejong", 8}, {"rosenbrock", 4}, {"ackley", 8}, {"rastrigin", 4}};
}

std::vector<ProtocolCase> full_protocol() {
  return {{"dejong", 32}, {"rosenbrock", 16}, {"ackley", 128}, {"rastrigin", 16}};
}

std::vector<ProtocolRow> run_protocol(const std::vector<ProtocolCase>& cases, std::size_t runs,
                                      std::uint64_t base_seed, std::uint64_t budget,
                                      double tolerance, const Overrides& o, std::size_t threads) {
  std::vector<ProtocolRow> rows;
  for (const auto& pc : cases) {
    const auto bench = bench::registry(pc.function, pc.dim);
    ExperimentSpec spec{pc.function, pc.dim, runs, base_seed,
                        make_hoopoe_config(bench, budget, o), tolerance, threads};
    ProtocolRow row;
    row.hoopoe = run_experiment(spec);
    spec.config = make_cuckoo_config(bench, budget, o);
    row.cuckoo = run_experiment(spec);
    row.comparison = compare(row.hoopoe, row.cuckoo);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string table_cell(const ExperimentSummary& s) {
  std::ostringstream c;
  c << (std::isnan(s.mean_evaluations) ? std::string("nan")
                                       : std::to_string(std::llround(s.mean_evaluations)))
    << '(' << std::llround(100.0 * s.success_rate) << "%)";
  return c.str();
}

}  // namespace

std::string table_csv(const std::vector<ProtocolRow>& rows) {
  std::ostringstream out;
  out << "function,dim,runs,budget,tolerance,"
         "cuckoo_success_rate,cuckoo_mean_evaluations,cuckoo_std_evaluations,cuckoo_cell,"
         "hoopoe_success_rate,hoopoe_mean_evaluations,hoopoe_std_evaluations,hoopoe_cell,"
         "mean_delta,hoopoe_wins,cuckoo_wins,ties\n";
  for (const auto& r : rows) {
    const auto& h = r.hoopoe;
    const auto& c = r.cuckoo;
    out << h.function << ',' << h.dim << ',' << h.runs << ',' << h.budget << ','
        << format_real(h.tolerance) << ',' << format_real(c.success_rate) << ','
        << format_real(c.mean_evaluations) << ',' << format_real(c.std_evaluations) << ','
        << table_cell(c) << ',' << format_real(h.success_rate) << ','
        << format_real(h.mean_evaluations) << ',' << format_real(h.std_evaluations) << ','
        << table_cell(h) << ',' << format_real(r.comparison.mean_delta) << ','
        << r.comparison.first_wins << ',' << r.comparison.second_wins << ',' << r.comparison.ties
        << '\n';
  }
  return out.str();
}

void emit_table(const std::vector<ProtocolRow>& rows, const std::filesystem::path& path) {
  write_file(path, table_csv(rows));
}

}  // namespace hoopoe::harness
