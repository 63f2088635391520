#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hoopoe/harness.hpp"

namespace hoopoe::harness {
namespace {

void print_summary(std::ostream& os, const ExperimentSummary& s) {
  os << s.function << " dim=" << s.dim << " " << to_string(s.algorithm) << ": success "
     << s.successes << "/" << s.runs << " (" << 100.0 * s.success_rate
     << "%), mean evaluations " << format_real(s.mean_evaluations) << ", std "
     << format_real(s.std_evaluations) << "\n";
}

void print_comparison(std::ostream& os, const ComparisonReport& c) {
  os << c.function << " dim=" << c.dim << " " << to_string(c.first) << " - "
     << to_string(c.second) << " mean delta " << format_real(c.mean_delta) << " ("
     << to_string(c.first_earlier ? c.first : c.second) << " earlier), paired wins "
     << c.first_wins << "/" << c.second_wins << ", ties " << c.ties << "\n";
}

std::filesystem::path with_suffix(const std::filesystem::path& p, std::string_view tag) {
  std::filesystem::path out = p;
  out.replace_filename(p.stem().string() + "_" + std::string(tag) + p.extension().string());
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Hoopoe Heuristic and cuckoo search benchmark runner", "hoopoe"};

  std::string function = "dejong";
  std::optional<std::size_t> dim;
  std::string algorithm = "hoopoe";
  std::string protocol;
  std::size_t runs = 1;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;
  double tolerance = 1e-3;
  std::size_t threads = 0;
  std::string out_path;
  std::string trace_path;
  Overrides o;

  app.add_option("--function", function, "Benchmark function")
      ->check(CLI::IsMember(bench::available()));
  app.add_option("--dim", dim, "Dimension (default: the function's registered dimension)")
      ->check(CLI::PositiveNumber);
  app.add_option("--algorithm", algorithm, "hoopoe, cuckoo or both")
      ->check(CLI::IsMember({"hoopoe", "cuckoo", "both"}));
  app.add_option("--protocol", protocol,
                 "Run the four-function suite with both algorithms: desk or full")
      ->check(CLI::IsMember({"desk", "full"}));
  app.add_option("--runs", runs, "Independent runs")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Base seed; run i uses seed + i");
  app.add_option("--budget", budget, "Evaluation budget per run")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", tolerance, "Success tolerance above the known optimum")
      ->check(CLI::PositiveNumber);
  app.add_option("--theta", o.theta, "Intensification threshold in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--pop", o.population, "Archive size")->check(CLI::PositiveNumber);
  app.add_option("--radius", o.radius, "Probe radius")->check(CLI::PositiveNumber);
  app.add_option("--probes", o.probes, "Probes per region")->check(CLI::PositiveNumber);
  app.add_option("--dig-threshold", o.dig_threshold, "Dig when p_s exceeds this")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--dig-budget", o.dig_budget, "Evaluations per dig");
  app.add_option("--shrink", o.shrink, "Dig radius contraction in (0, 1)");
  std::map<std::string, RadiusPolicy> policies{{"fixed", RadiusPolicy::fixed},
                                               {"adaptive", RadiusPolicy::adaptive}};
  app.add_option("--radius-policy", o.radius_policy, "Region radius policy: fixed or adaptive")
      ->transform(CLI::CheckedTransformer(policies, CLI::ignore_case));
  app.add_option("--contraction", o.contraction, "Region radius contraction after a plain probe");
  app.add_option("--min-radius-ratio", o.min_radius_ratio,
                 "Region is spent below this fraction of the probe radius");
  app.add_option("--alpha", o.alpha,
                 "Lévy step scale (cuckoo reference: multiplier on the offset from the best nest)")
      ->check(CLI::PositiveNumber);
  app.add_option("--lambda", o.lambda, "Lévy tail exponent in (1, 3]");
  app.add_option("--pa", o.p_a,
                 "Cuckoo discovery parameter (reference: per-coordinate keep probability; "
                 "textbook: abandoned fraction)")->check(CLI::Range(0.0, 1.0));
  app.add_option("--nests", o.nests, "Cuckoo nests")->check(CLI::PositiveNumber);
  std::map<std::string, CuckooVariant> variants{{"reference", CuckooVariant::reference},
                                                {"textbook", CuckooVariant::textbook}};
  app.add_option("--cuckoo-variant", o.cuckoo_variant, "Cuckoo variant: reference or textbook")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case));
  app.add_option("--threads", threads, "Worker threads (0: hardware concurrency)");
  app.add_option("--out", out_path, "Summary CSV (table CSV with --protocol)");
  app.add_option("--trace-out", trace_path, "Trace CSV of the first run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!protocol.empty()) {
      const auto cases = protocol == "full" ? full_protocol() : desk_protocol();
      const auto rows = run_protocol(cases, runs, seed, budget, tolerance, o, threads);
      for (const auto& r : rows) {
        print_summary(std::cout, r.cuckoo);
        print_summary(std::cout, r.hoopoe);
        print_comparison(std::cout, r.comparison);
      }
      if (!out_path.empty()) emit_table(rows, out_path);
      return 0;
    }

    const auto bench = bench::registry(function, dim);
    auto run_one = [&](Algorithm a) {
      ExperimentSpec spec{function, bench.dim(), runs, seed, {}, tolerance, threads};
      if (a == Algorithm::hoopoe)
        spec.config = make_hoopoe_config(bench, budget, o);
      else
        spec.config = make_cuckoo_config(bench, budget, o);
      return run_experiment(spec);
    };
    auto trace_of_first = [&](Algorithm a) {
      if (a == Algorithm::hoopoe) {
        auto c = make_hoopoe_config(bench, budget, o);
        c.target_tolerance = tolerance;
        c.seed = seed;
        return run(c, bench.objective);
      }
      auto c = make_cuckoo_config(bench, budget, o);
      c.target_tolerance = tolerance;
      c.seed = seed;
      return cuckoo_run(c, bench.objective);
    };

    if (algorithm == "both") {
      const auto hh = run_one(Algorithm::hoopoe);
      const auto cs = run_one(Algorithm::cuckoo);
      print_summary(std::cout, cs);
      print_summary(std::cout, hh);
      print_comparison(std::cout, compare(hh, cs));
      if (!out_path.empty()) {
        emit_csv(hh, with_suffix(out_path, "hoopoe"));
        emit_csv(cs, with_suffix(out_path, "cuckoo"));
      }
      if (!trace_path.empty()) {
        emit_trace(trace_of_first(Algorithm::hoopoe), with_suffix(trace_path, "hoopoe"));
        emit_trace(trace_of_first(Algorithm::cuckoo), with_suffix(trace_path, "cuckoo"));
      }
      return 0;
    }

    const Algorithm a = parse_algorithm(algorithm);
    const auto summary = run_one(a);
    print_summary(std::cout, summary);
    if (!out_path.empty()) emit_csv(summary, out_path);
    if (!trace_path.empty()) emit_trace(trace_of_first(a), trace_path);
    return 0;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hoopoe::harness
