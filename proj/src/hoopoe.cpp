#include "hoopoe/hoopoe.hpp"

#include <algorithm>
#include <cmath>

namespace hoopoe {
namespace {

std::size_t worst_slot(const std::vector<Candidate>& population) {
  std::size_t w = 0;
  for (std::size_t i = 1; i < population.size(); ++i)
    if (population[i].value > population[w].value) w = i;
  return w;
}

Evaluator make_evaluator(const HoopoeState& state, const HoopoeConfig& config,
                         const Objective& objective, const Hooks& hooks) {
  Evaluator ev(objective, config.max_evaluations, config.stop_value(), state.evaluations, state.best);
  if (hooks.on_evaluation) ev.set_observer(hooks.on_evaluation);
  return ev;
}

void sync(HoopoeState& state, const Evaluator& ev, Mode mode, const Hooks& hooks) {
  if (hooks.on_population) hooks.on_population(state.population);
  state.evaluations = ev.count();
  state.best = ev.best();
  ++state.iteration;
  state.trace.push_back({state.iteration, state.evaluations, state.best.value, mode});
  state.terminated = ev.halted();
}

}  // namespace

void HoopoeConfig::validate() const {
  if (population_size == 0) throw InvalidArgument("hoopoe: population_size must be positive");
  if (!(theta >= 0.0 && theta <= 1.0))
    throw InvalidArgument("hoopoe: theta must lie in [0, 1], got " + std::to_string(theta));
  if (max_evaluations < population_size)
    throw InvalidArgument("hoopoe: max_evaluations (" + std::to_string(max_evaluations) +
                          ") is smaller than population_size (" +
                          std::to_string(population_size) + ")");
  if (!(target_tolerance > 0.0))
    throw InvalidArgument("hoopoe: target_tolerance must be positive");
  if (!(region_contraction > 0.0 && region_contraction < 1.0))
    throw InvalidArgument("hoopoe: region_contraction must lie in (0, 1)");
  if (!(min_radius_ratio > 0.0 && min_radius_ratio < 1.0))
    throw InvalidArgument("hoopoe: min_radius_ratio must lie in (0, 1)");
  levy.validate();
  probe.validate();
}

HoopoeConfig HoopoeConfig::defaults_for(const Bounds& bounds) {
  HoopoeConfig c;
  const double w = bounds.max_width();
  c.levy.alpha = 0.01 * w;
  c.probe.radius = 0.1 * w;
  c.probe.dig_budget = 20 * bounds.dim();
  return c;
}

HoopoeState initialize(const HoopoeConfig& config, const Objective& objective, const Hooks& hooks) {
  config.validate();
  HoopoeState s;
  s.rng = Rng(config.seed);
  Evaluator ev(objective, config.max_evaluations, config.stop_value());
  if (hooks.on_evaluation) ev.set_observer(hooks.on_evaluation);

  s.population.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    auto c = ev.evaluate(uniform_point(objective.bounds, s.rng));
    // Early target hit: pad the archive without further evaluations.
    s.population.push_back(c ? std::move(*c) : s.population.back());
  }
  s.closed.assign(config.population_size, false);
  s.current = {s.rng.index(config.population_size), config.probe.radius};
  s.evaluations = ev.count();
  s.best = ev.best();
  s.trace.push_back({0, s.evaluations, s.best.value, Mode::init});
  s.terminated = ev.halted();
  return s;
}

void step(HoopoeState& state, const HoopoeConfig& config, const Objective& objective,
          const Hooks& hooks) {
  if (state.terminated) return;
  Evaluator ev = make_evaluator(state, config, objective, hooks);

  if (!state.closed[state.current.index]) {
    state.closed[state.current.index] = true;
    ++state.closed_count;
  }
  const Candidate& center = state.population[state.current.index];

  if (!should_intensify(state, config)) {
    auto move = levy::levy_move(center.position, config.levy, objective.bounds, state.rng,
                                hooks.step_source);
    state.truncated_steps += move.truncated;
    if (auto c = ev.evaluate(move.position)) {
      const std::size_t slot = worst_slot(state.population);
      state.population[slot] = std::move(*c);
      state.current = {slot, config.probe.radius};
    }
    sync(state, ev, Mode::diversify, hooks);
    return;
  }

  if (!state.mode_switch_iteration) state.mode_switch_iteration = state.iteration + 1;

  probing::ProbeParams params = config.probe;
  params.radius = state.current.radius;
  const probing::ProbeReport report =
      probing::probe_region(center, params, ev, state.rng, hooks.point_source);

  Mode mode = Mode::probe;
  Candidate next = report.best_sample;
  if (probing::should_dig(report, params) && !ev.halted()) {
    next = probing::dig(report.best_sample, params, ev, state.rng, hooks.point_source).best;
    mode = Mode::dig;
  }

  double radius = config.probe.radius;
  if (config.radius_policy == RadiusPolicy::adaptive) {
    // A region that no longer earns a dig is probed more tightly next time.
    radius = mode == Mode::dig ? state.current.radius
                               : state.current.radius * config.region_contraction;
    if (radius < config.min_radius_ratio * config.probe.radius) {
      // Region spent: probe again around the best point at full radius.
      radius = config.probe.radius;
      if (ev.best().value < next.value) next = ev.best();
    }
  }

  if (!report.samples.empty()) {
    const std::size_t slot = worst_slot(state.population);
    state.population[slot] = std::move(next);
    state.current = {slot, radius};
  } else {
    state.current.radius = radius;
  }
  sync(state, ev, mode, hooks);
}

RunResult run(const HoopoeConfig& config, const Objective& objective, const Hooks& hooks) {
  HoopoeState s = initialize(config, objective, hooks);
  while (!s.terminated) step(s, config, objective, hooks);
  RunResult r;
  r.best = s.best;
  r.evaluations_used = s.evaluations;
  r.success = s.best.value <= config.stop_value();
  r.mode_switch_iteration = s.mode_switch_iteration;
  r.trace = std::move(s.trace);
  r.seed = config.seed;
  r.truncated_steps = s.truncated_steps;
  return r;
}

}  // namespace hoopoe
