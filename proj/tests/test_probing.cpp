#include <doctest.h>

#include <cmath>
#include <vector>

#include "hoopoe/benchfns.hpp"
#include "hoopoe/probing.hpp"

using namespace hoopoe;
using namespace hoopoe::probing;

namespace {

Objective dejong2() { return bench::registry("dejong", 2).objective; }

Candidate at(const Objective& obj, Vector x) {
  const double v = obj.evaluate(x);
  return {std::move(x), v, 0};
}

double norm(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

// Fraction of the disk of radius r around (cx, cy) where x^2 + y^2 is below
// the center's value, by midpoint integration on an m x m grid.
double improving_fraction(double cx, double cy, double r, int m) {
  const double level = cx * cx + cy * cy;
  long inside = 0, better = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const double dx = -r + (i + 0.5) * 2 * r / m;
      const double dy = -r + (j + 0.5) * 2 * r / m;
      if (dx * dx + dy * dy > r * r) continue;
      ++inside;
      const double x = cx + dx, y = cy + dy;
      if (x * x + y * y < level) ++better;
    }
  }
  return static_cast<double>(better) / static_cast<double>(inside);
}

// Lattice points with spacing r / m inside the closed disk of radius r.
std::vector<Vector> disk_lattice(std::span<const double> c, double r, int m) {
  std::vector<Vector> pts;
  const double h = r / m;
  for (int i = -m; i <= m; ++i)
    for (int j = -m; j <= m; ++j)
      if (i * i + j * j <= m * m) pts.push_back({c[0] + i * h, c[1] + j * h});
  return pts;
}

}  // namespace

TEST_SUITE("probing") {
  TEST_CASE("parameter validation") {
    CHECK_NOTHROW(ProbeParams{}.validate());
    CHECK_THROWS_AS(ProbeParams({0.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(ProbeParams({1.0, 0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(ProbeParams({1.0, 4, 1.5}).validate(), InvalidArgument);
    CHECK_THROWS_AS(ProbeParams({1.0, 4, 0.3, 0, 1.0}).validate(), InvalidArgument);
    CHECK_THROWS_AS(ProbeParams({1.0, 4, 0.3, 0, 0.0}).validate(), InvalidArgument);
  }

  TEST_CASE("success probability counts strict improvements") {
    const auto obj = dejong2();
    Evaluator ev(obj, 100);
    Rng rng(0);
    const auto center = at(obj, {1.0, 1.0});
    PointSource four = [](std::span<const double>, double, std::size_t, Rng&) {
      return std::vector<Vector>{{0.5, 0.5}, {1.0, 1.0}, {2.0, 0.0}, {1.5, 1.5}};
    };
    const auto rep = probe_region(center, {0.1, 4}, ev, rng, four);
    CHECK(rep.success_probability == 0.25);
    CHECK(rep.best_sample.position == Vector{0.5, 0.5});
    CHECK(rep.samples.size() == 4);
    CHECK(ev.count() == 4);
    CHECK_FALSE(rep.budget_exhausted);
  }

  TEST_CASE("nothing improves on the global minimum") {
    const auto obj = dejong2();
    for (std::size_t k : {1u, 5u, 40u}) {
      Evaluator ev(obj, 1000);
      Rng rng(k);
      const auto rep = probe_region(at(obj, {0.0, 0.0}), {0.3, k}, ev, rng);
      CHECK(rep.success_probability == 0.0);
    }
  }

  TEST_CASE("probing near (1, 1) finds the downhill half") {
    const double oracle = improving_fraction(1.0, 1.0, 0.1, 2000);
    CHECK(oracle >= 0.25);
    CHECK(oracle < 0.5);
    const auto obj = dejong2();
    Evaluator ev(obj, 1000);
    Rng rng(2);
    const auto rep = probe_region(at(obj, {1.0, 1.0}), {0.1, 32}, ev, rng);
    CHECK(rep.success_probability >= 0.25);
  }

  TEST_CASE("success probability is a multiple of 1/k") {
    const auto obj = bench::registry("rastrigin", 3).objective;
    Rng rng(8);
    for (int t = 0; t < 300; ++t) {
      const std::size_t k = 1 + rng.index(20);
      Evaluator ev(obj, 1000);
      const auto center = at(obj, uniform_point(obj.bounds, rng));
      const auto rep = probe_region(center, {rng.uniform(0.01, 2.0), k}, ev, rng);
      const double scaled = rep.success_probability * static_cast<double>(k);
      CHECK(scaled == std::round(scaled));
      CHECK(rep.samples.size() == k);
      CHECK(ev.count() == k);
    }
  }

  TEST_CASE("budget exhaustion is flagged") {
    const auto obj = dejong2();
    Evaluator ev(obj, 3);
    Rng rng(1);
    const auto rep = probe_region(at(obj, {1.0, 1.0}), {0.5, 10}, ev, rng);
    CHECK(rep.budget_exhausted);
    CHECK(rep.samples.size() == 3);
    CHECK(ev.count() == 3);
  }

  TEST_CASE("probe points lie in the ball and in bounds") {
    Rng rng(12);
    for (int t = 0; t < 20000; ++t) {
      const Vector c{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
      const double r = rng.uniform(0.001, 5.0);
      CHECK(norm(sample_ball(c, r, rng), c) <= r * (1 + 1e-12));
    }
    const auto obj = dejong2();
    Evaluator ev(obj, 100000);
    for (int t = 0; t < 200; ++t) {
      const auto rep = probe_region(at(obj, {5.0, -5.0}), {2.0, 20}, ev, rng);
      for (const auto& s : rep.samples) CHECK(obj.bounds.contains(s.position));
    }
  }

  TEST_CASE("should_dig is strict") {
    ProbeReport rep;
    rep.success_probability = 0.5;
    CHECK_FALSE(should_dig(rep, {1.0, 10, 0.5}));
    rep.success_probability = 0.51;
    CHECK(should_dig(rep, {1.0, 10, 0.5}));
    rep.success_probability = 0.0;
    CHECK_FALSE(should_dig(rep, {1.0, 10, 0.0}));
  }

  TEST_CASE("dig with no budget returns the center") {
    const auto obj = dejong2();
    Evaluator ev(obj, 100);
    Rng rng(0);
    const auto c = at(obj, {1.0, 1.0});
    const auto d = dig(c, {0.5, 10, 0.3, 0}, ev, rng);
    CHECK(d.best == c);
    CHECK(d.evaluations == 0);
    CHECK(ev.count() == 0);
  }

  TEST_CASE("dig never worsens its center") {
    Rng pick(4);
    for (const auto& name : bench::available()) {
      const auto obj = bench::registry(name, 4).objective;
      for (int t = 0; t < 100; ++t) {
        Evaluator ev(obj, 100000);
        Rng rng(pick.index(1u << 30));
        const auto c = at(obj, uniform_point(obj.bounds, rng));
        ProbeParams p{rng.uniform(0.01, 3.0), 1 + rng.index(12), 0.3, rng.index(200),
                      rng.uniform(0.1, 0.9)};
        const auto d = dig(c, p, ev, rng);
        CHECK(d.best.value <= c.value);
        CHECK(d.evaluations <= p.dig_budget);
        CHECK(d.evaluations == ev.count());
      }
    }
  }

  TEST_CASE("dig from (1, 1) against the reachable-set bound") {
    // Contracting balls travel at most r / (1 - shrink) from the start, so the
    // best value reachable on the bowl is (max(0, |c| - reach))^2.
    auto reachable = [](double r, double shrink) {
      const double gap = std::max(0.0, std::sqrt(2.0) - r / (1.0 - shrink));
      return gap * gap;
    };
    const auto obj = dejong2();
    const auto c = at(obj, {1.0, 1.0});

    CHECK(reachable(0.5, 0.5) > 0.17);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Evaluator ev(obj, 100000);
      Rng rng(seed);
      const auto d = dig(c, {0.5, 10, 0.3, 500, 0.5}, ev, rng);
      CHECK(d.best.value >= reachable(0.5, 0.5));
    }

    CHECK(reachable(0.5, 0.8) == 0.0);
    Evaluator ev(obj, 100000);
    Rng rng(1);
    const auto d = dig(c, {0.5, 10, 0.3, 500, 0.8}, ev, rng);
    CHECK(d.best.value < 0.05);
  }

  TEST_CASE("dig on a lattice matches exhaustive search") {
    const auto obj = dejong2();
    const int m = 6;
    PointSource lattice = [m](std::span<const double> c, double r, std::size_t, Rng&) {
      return disk_lattice(c, r, m);
    };
    for (const Vector start : {Vector{1.3, -0.7}, Vector{-2.0, 2.5}, Vector{0.05, 0.4}}) {
      for (double shrink : {0.5, 0.7}) {
        const double r0 = 0.8;
        // Exhaustive oracle: scan every lattice point of each ball in turn.
        Vector x = start;
        double fx = x[0] * x[0] + x[1] * x[1];
        double r = r0;
        for (int round = 0; round < 200; ++round) {
          Vector best = x;
          double fbest = fx;
          const double h = r / m;
          for (int i = -m; i <= m; ++i) {
            for (int j = -m; j <= m; ++j) {
              if (i * i + j * j > m * m) continue;
              const Vector p{std::clamp(x[0] + i * h, -5.12, 5.12),
                             std::clamp(x[1] + j * h, -5.12, 5.12)};
              const double fp = p[0] * p[0] + p[1] * p[1];
              if (fp < fbest) {
                best = p;
                fbest = fp;
              }
            }
          }
          if (!(fbest < fx)) break;
          x = best;
          fx = fbest;
          r *= shrink;
        }

        Evaluator ev(obj, 10000000);
        Rng rng(0);
        const auto k = disk_lattice(start, r0, m).size();
        const auto d = dig(at(obj, start), {r0, k, 0.3, 1000000, shrink}, ev, rng, lattice);
        CAPTURE(start);
        CAPTURE(shrink);
        CHECK(d.best.position == x);
        CHECK(d.best.value == fx);
      }
    }
  }
}
