#include "hoopoe/cuckoo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hoopoe {
namespace {

struct Search {
  const CuckooConfig& config;
  const Hooks& hooks;
  const Bounds& bounds;
  Rng rng;
  Evaluator ev;
  std::vector<Candidate> nests;
  std::uint64_t truncated = 0;

  Vector draw_step() {
    const std::size_t n = bounds.dim();
    return hooks.step_source ? hooks.step_source(n, rng) : levy::sample_step(config.levy, n, rng);
  }

  // Returns false once the evaluator halts.
  bool reference_generation() {
    const std::size_t n = bounds.dim();
    Vector scale(n);
    for (std::size_t i = 0; i < nests.size(); ++i) {
      const Vector& best = ev.best().position;
      for (std::size_t d = 0; d < n; ++d)
        scale[d] = config.levy.alpha * (nests[i].position[d] - best[d]) * rng.normal();
      const levy::Move move = levy::displace(nests[i].position, scale, draw_step(), bounds);
      truncated += move.truncated;
      auto cuckoo = ev.evaluate(move.position);
      if (!cuckoo) return false;
      if (cuckoo->value <= nests[i].value) nests[i] = std::move(*cuckoo);
    }
    if (config.p_a == 0.0) return !ev.halted();

    std::vector<std::size_t> p(nests.size());
    std::vector<std::size_t> q(nests.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::iota(q.begin(), q.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng.engine());
    std::shuffle(q.begin(), q.end(), rng.engine());
    const double r = rng.uniform();
    std::vector<Vector> trial(nests.size());
    std::vector<bool> discovered(nests.size(), false);
    for (std::size_t i = 0; i < nests.size(); ++i) {
      trial[i] = nests[i].position;
      for (std::size_t d = 0; d < n; ++d) {
        if (rng.uniform() > config.p_a) {
          trial[i][d] += r * (nests[p[i]].position[d] - nests[q[i]].position[d]);
          discovered[i] = true;
        }
      }
    }
    for (std::size_t i = 0; i < nests.size(); ++i) {
      if (!discovered[i]) continue;
      auto c = ev.evaluate(repair(trial[i], bounds));
      if (!c) return false;
      if (c->value <= nests[i].value) nests[i] = std::move(*c);
    }
    return !ev.halted();
  }

  bool textbook_generation() {
    for (std::size_t i = 0; i < nests.size(); ++i) {
      const levy::Move move =
          levy::levy_move(nests[i].position, config.levy, bounds, rng, hooks.step_source);
      truncated += move.truncated;
      auto cuckoo = ev.evaluate(move.position);
      if (!cuckoo) return false;
      const std::size_t j = rng.index(nests.size());
      if (cuckoo->value < nests[j].value) nests[j] = std::move(*cuckoo);
    }
    const std::size_t abandon = config.abandoned_per_generation();
    std::vector<std::size_t> order(nests.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return nests[a].value > nests[b].value;
    });
    for (std::size_t k = 0; k < abandon; ++k) {
      auto c = ev.evaluate(uniform_point(bounds, rng));
      if (!c) return false;
      nests[order[k]] = std::move(*c);
    }
    return !ev.halted();
  }
};

}  // namespace

void CuckooConfig::validate() const {
  if (nests == 0) throw InvalidArgument("cuckoo: nests must be positive");
  if (!(p_a >= 0.0 && p_a <= 1.0))
    throw InvalidArgument("cuckoo: p_a must lie in [0, 1], got " + std::to_string(p_a));
  if (max_evaluations < nests)
    throw InvalidArgument("cuckoo: max_evaluations (" + std::to_string(max_evaluations) +
                          ") is smaller than nests (" + std::to_string(nests) + ")");
  if (!(target_tolerance > 0.0)) throw InvalidArgument("cuckoo: target_tolerance must be positive");
  levy.validate();
}

std::size_t CuckooConfig::abandoned_per_generation() const noexcept {
  return static_cast<std::size_t>(std::ceil(p_a * static_cast<double>(nests) - 1e-12));
}

RunResult cuckoo_run(const CuckooConfig& config, const Objective& objective, const Hooks& hooks) {
  config.validate();
  Search s{config, hooks, objective.bounds, Rng(config.seed),
           Evaluator(objective, config.max_evaluations, config.stop_value()), {}, 0};
  if (hooks.on_evaluation) s.ev.set_observer(hooks.on_evaluation);

  RunResult r;
  r.seed = config.seed;
  s.nests.reserve(config.nests);
  for (std::size_t i = 0; i < config.nests; ++i) {
    auto c = s.ev.evaluate(uniform_point(objective.bounds, s.rng));
    s.nests.push_back(c ? std::move(*c) : s.nests.back());
  }
  r.trace.push_back({0, s.ev.count(), s.ev.best().value, Mode::init});

  std::uint64_t generation = 0;
  bool live = !s.ev.halted();
  while (live) {
    live = config.variant == CuckooVariant::reference ? s.reference_generation()
                                                       : s.textbook_generation();
    if (hooks.on_population) hooks.on_population(s.nests);
    r.trace.push_back({++generation, s.ev.count(), s.ev.best().value, Mode::diversify});
  }

  r.best = s.ev.best();
  r.evaluations_used = s.ev.count();
  r.success = r.best.value <= config.stop_value();
  r.truncated_steps = s.truncated;
  return r;
}

}  // namespace hoopoe
