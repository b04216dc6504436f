#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "hartogs/radial_fourier.hpp"
#include "hartogs/smoothing.hpp"
#include "hartogs/tube.hpp"

using namespace hartogs;

namespace {

RadialModeSeries single_mode(const PolarGrid& grid, int n,
                             std::function<Complex(Scalar)> fn) {
  std::vector<RadialModeSeries::ModeMap> modes(1);
  modes[0].emplace(n, RadialProfile(grid.radii(), std::move(fn)));
  return RadialModeSeries(grid, std::move(modes));
}

}  // namespace

TEST_CASE("polar grid validation") {
  CHECK_NOTHROW(PolarGrid::make_default());
  const PolarGrid g = PolarGrid::make_default();
  CHECK(g.n_radii() == 64);
  CHECK(g.n_theta() == 256);
  CHECK(g.radii()[g.n_radii() - 1] == 1.0);
  CHECK(g.r_min() <= 0.05);
  CHECK(g.r_min() > 0);

  ArrayXd bad = g.radii();
  bad[5] = bad[4];  // not strictly increasing
  CHECK_THROWS_AS(PolarGrid(bad, 256), DomainError);
  CHECK_THROWS_AS(PolarGrid(g.radii(), 100), DomainError);  // not a power of 2
}

TEST_CASE("evaluate: constant and linear modes") {
  const PolarGrid grid = PolarGrid::make_default();

  // Single constant mode A_0 = 0.3.
  const auto c = single_mode(grid, 0, [](Scalar) { return Complex(0.3, 0); });
  CHECK(std::abs(evaluate(c, 0.5, 1.234, 0) - Complex(0.3, 0)) < 1e-15);
  CHECK(std::abs(evaluate(c, 0.0, 0.0, 0) - Complex(0.3, 0)) < 1e-15);

  // F(z) = 0.5 z: A_1(r) = 0.5 r; at (1, pi/2) the value is 0.5i.
  const auto f = single_mode(grid, 1, [](Scalar r) { return Complex(0.5 * r, 0); });
  const Complex v = evaluate(f, 1.0, std::numbers::pi / 2, 0);
  CHECK(std::abs(v - Complex(0, 0.5)) < 1e-15);

  CHECK_THROWS_AS(evaluate(f, 1.5, 0.0, 0), DomainError);
  CHECK_THROWS_AS(evaluate(f, -0.1, 0.0, 0), DomainError);
}

TEST_CASE("evaluate: cutoff-style profile matches its closed form") {
  // chi/r with chi a smooth switch scaled to plateau (N+1/2)/(N+1).
  const int N = 3;
  const Scalar plateau = (N + 0.5) / (N + 1);
  const SmoothSwitch chi_switch(1.0 / (4 * (N + 1)), 1.0 / (N + 1));
  const PolarGrid grid = PolarGrid::make_default();
  const auto f = single_mode(grid, -1, [=](Scalar r) {
    const Scalar s = chi_switch(r);
    return s == 0.0 ? Complex(0, 0) : Complex(plateau * s / r, 0);
  });
  // On the plateau the value at theta = 0 is (N+1/2)/((N+1) r).
  for (Scalar r : {0.3, 0.6, 0.9, 1.0}) {
    const Complex v = evaluate(f, r, 0.0, 0);
    CHECK(std::abs(v - Complex(plateau / r, 0)) < 1e-14);
  }
  CHECK(std::abs(f.modes(0).at(-1).at_zero()) == 0.0);
}

TEST_CASE("evaluate at r = 0 keeps only the constant mode") {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> modes(1);
  modes[0].emplace(0, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.2 + 0.1 * r, 0);
  }));
  modes[0].emplace(1, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.5 * r, 0);
  }));
  const RadialModeSeries s(grid, std::move(modes));
  CHECK(std::abs(evaluate(s, 0, 0.7, 0) - Complex(0.2, 0)) < 1e-15);
  CHECK(s.fact_violation() == 0.0);
}

TEST_CASE("tube membership") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto f = single_mode(grid, 1, [](Scalar r) { return Complex(0.5 * r, 0); });
  const Scalar rho_g = 0.15, rho_b = 0.1;
  const TubeNeighborhood tube(f, rho_g, rho_b);

  VectorXcd w(1);

  // Point on the graph.
  const Complex zeta(0.3, 0.4);
  w[0] = evaluate_point(f, zeta)[0];
  CHECK(tube_contains(tube, zeta, w));

  // Boundary-cylinder point (1, 0).
  w[0] = Complex(0, 0);
  CHECK(tube_contains(tube, Complex(1, 0), w));

  // Fiber displacement of 2 rho_g at the origin.
  w[0] = evaluate_point(f, Complex(0, 0))[0] + Complex(2 * rho_g, 0);
  CHECK_FALSE(tube_contains(tube, Complex(0, 0), w));

  // delta0 invariant: near the origin, half-radius fibers are members.
  std::mt19937 rng(7);
  std::uniform_real_distribution<Scalar> u(-1, 1);
  for (int t = 0; t < 100; ++t) {
    const Complex z(u(rng) * tube.delta0() / 2, u(rng) * tube.delta0() / 2);
    w[0] = evaluate_point(f, z)[0] +
           Complex(u(rng), u(rng)) * (rho_g / 4);
    CHECK(tube_contains(tube, z, w));
  }
}

TEST_CASE("tube membership is monotone in the radii") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto f = single_mode(grid, -1, [](Scalar r) {
    return Complex(0.4 * r, 0.2 * r * r);
  });
  std::mt19937 rng(11);
  std::uniform_real_distribution<Scalar> u(-1.2, 1.2);
  for (int t = 0; t < 300; ++t) {
    const Complex z(u(rng), u(rng));
    VectorXcd w(1);
    w[0] = Complex(u(rng), u(rng));
    const TubeNeighborhood small(f, 0.1, 0.05);
    const TubeNeighborhood large(f, 0.25, 0.12);
    if (std::abs(z) > 1 + 0.05 && std::abs(z) < 1 + 0.12) continue;
    if (tube_contains(small, z, w)) CHECK(tube_contains(large, z, w));
  }
}

TEST_CASE("mode series round-trip on a band-limited sample") {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> modes(2);
  modes[0].emplace(-1, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.3 * r, -0.1 * r);
  }));
  modes[0].emplace(2, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.05 * r * r, 0.02 * r * r);
  }));
  modes[1].emplace(0, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.1 + 0.2 * r, 0);
  }));
  const RadialModeSeries s(grid, std::move(modes));

  const DiscSample sample = samples_from_modes(s, grid);
  const RadialModeSeries back = modes_from_samples(sample, 4);
  const DiscSample again = samples_from_modes(back, grid);
  Scalar worst = 0;
  for (int j = 0; j < 2; ++j)
    worst = std::max(worst,
                     (sample.values(j) - again.values(j)).abs().maxCoeff());
  CHECK(worst < kTolFft);
}
