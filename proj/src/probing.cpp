#include "hoopoe/probing.hpp"

#include <algorithm>
#include <cmath>

namespace hoopoe::probing {

void ProbeParams::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidArgument("probe: radius must be positive, got " + std::to_string(radius));
  if (probes_per_region == 0) throw InvalidArgument("probe: probes_per_region must be at least 1");
  if (!(dig_threshold >= 0.0 && dig_threshold <= 1.0))
    throw InvalidArgument("probe: dig_threshold must lie in [0, 1], got " +
                          std::to_string(dig_threshold));
  if (!(shrink_factor > 0.0 && shrink_factor < 1.0))
    throw InvalidArgument("probe: shrink_factor must lie in (0, 1), got " +
                          std::to_string(shrink_factor));
}

Vector sample_ball(std::span<const double> center, double radius, Rng& rng) {
  const std::size_t n = center.size();
  Vector dir(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& d : dir) {
      d = rng.normal();
      norm2 += d * d;
    }
  } while (norm2 == 0.0);
  const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(n)) / std::sqrt(norm2);
  Vector x(center.begin(), center.end());
  for (std::size_t i = 0; i < n; ++i) x[i] += r * dir[i];
  return x;
}

ProbeReport probe_region(const Candidate& center, const ProbeParams& params, Evaluator& evaluator,
                         Rng& rng, const PointSource& source) {
  params.validate();
  const Bounds& bounds = evaluator.bounds();
  if (center.position.size() != bounds.dim())
    throw InvalidArgument("probe_region: center has dimension " +
                          std::to_string(center.position.size()) + ", bounds have " +
                          std::to_string(bounds.dim()));

  std::vector<Vector> points;
  if (source) {
    points = source(center.position, params.radius, params.probes_per_region, rng);
  } else {
    points.reserve(params.probes_per_region);
    for (std::size_t i = 0; i < params.probes_per_region; ++i)
      points.push_back(sample_ball(center.position, params.radius, rng));
  }

  ProbeReport report{center, {}, 0.0, center, false};
  report.samples.reserve(points.size());
  std::size_t improving = 0;
  for (const auto& p : points) {
    auto c = evaluator.evaluate(repair(p, bounds));
    if (!c) {
      report.budget_exhausted = true;
      break;
    }
    if (c->value < center.value) ++improving;
    if (report.samples.empty() || c->value < report.best_sample.value) report.best_sample = *c;
    report.samples.push_back(std::move(*c));
  }
  if (!points.empty())
    report.success_probability = static_cast<double>(improving) / static_cast<double>(points.size());
  return report;
}

DigResult dig(const Candidate& center, const ProbeParams& params, Evaluator& evaluator, Rng& rng,
              const PointSource& source) {
  params.validate();
  DigResult out{center, 0, 0, 0.0};
  ProbeParams round = params;
  while (out.evaluations < params.dig_budget && !evaluator.halted()) {
    round.probes_per_region =
        std::min<std::uint64_t>(params.probes_per_region, params.dig_budget - out.evaluations);
    const ProbeReport rep = probe_region(out.best, round, evaluator, rng, source);
    out.evaluations += rep.samples.size();
    ++out.rounds;
    if (rep.samples.empty() || !(rep.best_sample.value < out.best.value)) break;
    out.best = rep.best_sample;
    out.last_improving_radius = round.radius;
    round.radius *= params.shrink_factor;
  }
  return out;
}

}  // namespace hoopoe::probing
