#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hoopoe/benchfns.hpp"
#include "hoopoe/hoopoe.hpp"

using namespace hoopoe;

namespace {

HoopoeConfig config_for(const bench::BenchmarkSpec& b, std::uint64_t budget, std::uint64_t seed) {
  HoopoeConfig c = HoopoeConfig::defaults_for(b.bounds());
  c.max_evaluations = budget;
  c.seed = seed;
  return c;
}

int phase(Mode m) {
  switch (m) {
    case Mode::init: return 0;
    case Mode::diversify: return 1;
    default: return 2;
  }
}

}  // namespace

TEST_SUITE("hoopoe") {
  TEST_CASE("config validation") {
    HoopoeConfig c;
    CHECK_NOTHROW(c.validate());
    auto bad = c;
    bad.population_size = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = c;
    bad.theta = 1.5;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = c;
    bad.max_evaluations = c.population_size - 1;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = c;
    bad.target_tolerance = 0.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = c;
    bad.region_contraction = 1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = c;
    bad.levy.lambda = 0.5;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  }

  TEST_CASE("initialize fills the archive") {
    const auto b = bench::registry("rastrigin", 5);
    const auto c = config_for(b, 1000, 3);
    const auto s = initialize(c, b.objective);
    CHECK(s.population.size() == 25);
    CHECK(s.evaluations == 25);
    CHECK(s.closed_count == 0);
    const auto lowest = std::min_element(s.population.begin(), s.population.end(),
                                         [](auto& x, auto& y) { return x.value < y.value; });
    CHECK(s.best_value() == lowest->value);
    CHECK(s.trace.size() == 1);
    CHECK(s.trace[0].mode == Mode::init);
    const auto again = initialize(c, b.objective);
    CHECK(again.population == s.population);
    CHECK(again.current == s.current);
  }

  TEST_CASE("should_intensify compares the closed ratio strictly") {
    HoopoeState s;
    s.population.resize(10);
    HoopoeConfig c;
    c.theta = 0.5;
    s.closed_count = 5;
    CHECK_FALSE(should_intensify(s, c));
    s.closed_count = 6;
    CHECK(should_intensify(s, c));
    c.theta = 1.0;
    for (std::size_t k = 0; k <= 10; ++k) {
      s.closed_count = k;
      CHECK_FALSE(should_intensify(s, c));
    }
  }

  TEST_CASE("theta 1 only diversifies") {
    const auto b = bench::registry("ackley", 4);
    auto c = config_for(b, 3000, 1);
    c.theta = 1.0;
    const auto r = run(c, b.objective);
    CHECK_FALSE(r.mode_switch_iteration);
    for (const auto& t : r.trace) CHECK((t.mode == Mode::init || t.mode == Mode::diversify));
  }

  TEST_CASE("theta 0 intensifies from the first step") {
    const auto b = bench::registry("ackley", 4);
    auto c = config_for(b, 3000, 1);
    c.theta = 0.0;
    const auto r = run(c, b.objective);
    const auto diversify =
        std::count_if(r.trace.begin(), r.trace.end(), [](auto& t) { return t.mode == Mode::diversify; });
    CHECK(diversify <= 1);
    REQUIRE(r.mode_switch_iteration);
    CHECK(*r.mode_switch_iteration == 1);
  }

  TEST_CASE("zero flight keeps the position and costs one evaluation") {
    const auto b = bench::registry("rastrigin", 3);
    auto c = config_for(b, 1000, 5);
    c.theta = 1.0;
    Hooks hooks;
    hooks.step_source = [](std::size_t n, Rng&) { return Vector(n, 0.0); };
    auto s = initialize(c, b.objective, hooks);
    for (int i = 0; i < 10; ++i) {
      const Vector before = s.population[s.current.index].position;
      const auto evals = s.evaluations;
      step(s, c, b.objective, hooks);
      CHECK(s.evaluations == evals + 1);
      CHECK(s.population[s.current.index].position == before);
      CHECK(s.trace.back().mode == Mode::diversify);
    }
  }

  TEST_CASE("step invariants on rastrigin") {
    const auto b = bench::registry("rastrigin", 4);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      auto c = config_for(b, 1000000, seed);
      std::vector<double> values;
      Hooks hooks;
      hooks.on_evaluation = [&](const Candidate& x) { values.push_back(x.value); };
      auto s = initialize(c, b.objective, hooks);
      for (int i = 0; i < 1000 && !s.terminated; ++i) {
        const auto before = s;
        step(s, c, b.objective, hooks);
        CHECK(s.best_value() <= before.best_value());
        CHECK(s.closed_count >= before.closed_count);
        CHECK(s.closed_count <= c.population_size);
        CHECK(s.evaluations > before.evaluations);
        CHECK(s.population.size() == c.population_size);
        CHECK(std::count(s.closed.begin(), s.closed.end(), true) ==
              static_cast<long>(s.closed_count));
      }
      // Replay: every trace row reports the running minimum of all values seen.
      REQUIRE(values.size() == s.evaluations);
      for (const auto& t : s.trace) {
        const double running = *std::min_element(values.begin(), values.begin() + t.evaluations);
        CHECK(t.best_value == running);
      }
    }
  }

  TEST_CASE("one diversification phase then one intensification phase") {
    for (const auto& name : bench::available()) {
      const auto b = bench::registry(name, 4);
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = run(config_for(b, 5000, seed), b.objective);
        CHECK(std::is_sorted(r.trace.begin(), r.trace.end(),
                             [](auto& x, auto& y) { return phase(x.mode) < phase(y.mode); }));
        for (std::size_t i = 1; i < r.trace.size(); ++i) {
          CHECK(r.trace[i].best_value <= r.trace[i - 1].best_value);
          CHECK(r.trace[i].evaluations > r.trace[i - 1].evaluations);
        }
        CHECK(r.evaluations_used <= 5000);
        CHECK(r.success == (r.best.value <= 1e-3));
        CHECK(r.best.value == r.trace.back().best_value);
        CHECK(b.bounds().contains(r.best.position));
      }
    }
  }

  TEST_CASE("fixed radius policy probes at the configured radius") {
    const auto b = bench::registry("dejong", 3);
    auto c = config_for(b, 2000, 2);
    c.radius_policy = RadiusPolicy::fixed;
    auto s = initialize(c, b.objective);
    while (!s.terminated) {
      step(s, c, b.objective);
      CHECK(s.current.radius == c.probe.radius);
    }
  }

  TEST_CASE("population observer sees the archive after every step") {
    const auto b = bench::registry("dejong", 3);
    const auto c = config_for(b, 2000, 2);
    std::size_t calls = 0;
    Hooks hooks;
    hooks.on_population = [&](std::span<const Candidate> pop) {
      CHECK(pop.size() == c.population_size);
      ++calls;
    };
    const auto r = run(c, b.objective, hooks);
    CHECK(calls == r.trace.size() - 1);
  }

  TEST_CASE("de jong 2-d is solved on nearly every seed") {
    const auto b = bench::registry("dejong", 2);
    std::size_t successes = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      auto c = config_for(b, 10000, seed);
      c.population_size = 25;
      c.theta = 0.2;
      c.target_value = 0.0;
      c.target_tolerance = 1e-6;
      const auto r = run(c, b.objective);
      if (r.success) {
        ++successes;
        CHECK(r.evaluations_used < 10000);
      }
    }
    CHECK(successes >= 49);
  }

  TEST_CASE("budget equal to the archive size stops after initialization") {
    const auto b = bench::registry("rosenbrock", 3);
    auto c = config_for(b, 25, 8);
    const auto s = initialize(c, b.objective);
    const auto r = run(c, b.objective);
    CHECK(r.evaluations_used == 25);
    CHECK(r.trace.size() == 1);
    CHECK(r.best.value == s.best_value());
  }

  TEST_CASE("runs are bit-identical for a seed") {
    const auto b = bench::registry("ackley", 6);
    const auto c = config_for(b, 20000, 77);
    const auto a = run(c, b.objective);
    CHECK(a == run(c, b.objective));
    auto other = c;
    other.seed = 78;
    CHECK_FALSE(a == run(other, b.objective));
  }
}
