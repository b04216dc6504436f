#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "hartogs/radial_fourier.hpp"

using namespace hartogs;

namespace {

RadialModeSeries make_series(
    const PolarGrid& grid,
    std::vector<std::pair<int, std::function<Complex(Scalar)>>> modes) {
  std::vector<RadialModeSeries::ModeMap> mm(1);
  for (auto& [n, fn] : modes)
    mm[0].emplace(n, RadialProfile(grid.radii(), std::move(fn)));
  return RadialModeSeries(grid, std::move(mm));
}

// Independent oracle: the Cesaro mean as the literal average of partial sums
// S_0..S_N, evaluated pointwise.
Complex cesaro_oracle(const RadialModeSeries& s, int N, Scalar r, Scalar theta,
                      int j) {
  Complex total = 0;
  for (int m = 0; m <= N; ++m) {
    Complex sm = 0;
    for (const auto& [n, profile] : s.modes(j))
      if (std::abs(n) <= m) sm += profile(r) * std::polar(1.0, n * theta);
    total += sm;
  }
  return total / static_cast<Scalar>(N + 1);
}

Scalar oracle_sup_error(const RadialModeSeries& s, int N) {
  const PolarGrid& g = s.grid();
  Scalar worst = 0;
  for (int i = 0; i < g.n_radii(); ++i)
    for (int k = 0; k < g.n_theta(); ++k) {
      const Scalar r = g.radii()[i], th = g.theta(k);
      worst = std::max(worst, std::abs(evaluate(s, r, th, 0) -
                                       cesaro_oracle(s, N, r, th, 0)));
    }
  return worst;
}

}  // namespace

TEST_CASE("modes_from_samples: linear map and constants") {
  const PolarGrid grid = PolarGrid::make_default();
  // F(z) = 0.5 z.
  {
    const auto s = make_series(grid, {{1, [](Scalar r) { return Complex(0.5 * r, 0); }}});
    const auto back = modes_from_samples(samples_from_modes(s, grid), 4);
    for (int i = 0; i < grid.n_radii(); ++i) {
      CHECK(std::abs(back.modes(0).at(1).samples()[i] - Complex(0.5 * grid.radii()[i], 0)) < kTolFft);
      for (int n : {-4, -3, -2, -1, 0, 2, 3, 4})
        CHECK(std::abs(back.modes(0).at(n).samples()[i]) < kTolFft);
    }
  }
  // F == c.
  {
    const Complex c(0.3, -0.2);
    const auto s = make_series(grid, {{0, [c](Scalar) { return c; }}});
    const auto back = modes_from_samples(samples_from_modes(s, grid), 3);
    for (int i = 0; i < grid.n_radii(); ++i) {
      CHECK(std::abs(back.modes(0).at(0).samples()[i] - c) < kTolFft);
      CHECK(std::abs(back.modes(0).at(1).samples()[i]) < kTolFft);
    }
    CHECK(std::abs(back.modes(0).at(0).at_zero() - c) < 1e-8);
  }
  CHECK_THROWS_AS(
      modes_from_samples(
          samples_from_modes(make_series(grid, {{0, [](Scalar) { return Complex(1, 0); }}}), grid),
          grid.n_theta() / 2),
      AliasingError);
}

TEST_CASE("modes_from_samples: totally-real disc function") {
  // g(z, zbar) = zbar(1-|z|^4) + i zbar(1-|z|^2) has the single mode
  // A_{-1}(r) = r(1-r^4) + i r(1-r^2).
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<ArrayXXcd> values(1, ArrayXXcd::Zero(grid.n_radii(), grid.n_theta()));
  for (int i = 0; i < grid.n_radii(); ++i)
    for (int k = 0; k < grid.n_theta(); ++k) {
      const Complex z = std::polar(grid.radii()[i], grid.theta(k));
      const Scalar r2 = std::norm(z);
      values[0](i, k) = std::conj(z) * (1 - r2 * r2) +
                        Complex(0, 1) * std::conj(z) * (1 - r2);
    }
  const auto series = modes_from_samples(DiscSample(grid, values), 4);
  for (int i = 0; i < grid.n_radii(); ++i) {
    const Scalar r = grid.radii()[i];
    const Complex expect(r * (1 - std::pow(r, 4)), r * (1 - r * r));
    CHECK(std::abs(series.modes(0).at(-1).samples()[i] - expect) < kTolFft);
    for (int n : {-4, -3, -2, 0, 1, 2, 3, 4})
      CHECK(std::abs(series.modes(0).at(n).samples()[i]) < kTolFft);
  }
}

TEST_CASE("samples_from_modes: single negative mode and empty set") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto s = make_series(grid, {{-1, [](Scalar r) { return Complex(r, 0); }}});
  const DiscSample sample = samples_from_modes(s, grid);
  for (int i = 0; i < grid.n_radii(); i += 7)
    for (int k = 0; k < grid.n_theta(); k += 31) {
      const Complex expect =
          grid.radii()[i] * std::polar(1.0, -grid.theta(k));
      CHECK(std::abs(sample.values(0)(i, k) - expect) < 1e-14);
    }

  std::vector<RadialModeSeries::ModeMap> empty(1);
  const RadialModeSeries zero(grid, std::move(empty));
  const DiscSample zs = samples_from_modes(zero, grid);
  CHECK(zs.values(0).abs().maxCoeff() == 0.0);
}

TEST_CASE("fejer: degree search against the partial-sum oracle") {
  PolarGrid grid(PolarGrid::make_default().radii(), 256);
  // Trigonometric polynomial of degree 3 with nontrivial radial profiles.
  const auto s = make_series(
      grid, {{-3, [](Scalar r) { return Complex(0.1 * r * r, 0.05 * r); }},
             {-1, [](Scalar r) { return Complex(0.2 * r, -0.1 * r); }},
             {0, [](Scalar r) { return Complex(0.1, 0.05 * r); }},
             {2, [](Scalar r) { return Complex(0.15 * r * r, 0); }}});
  const int d = 3;

  // Frozen oracle values: scan sigma_N over N = 0..4d via partial sums.
  std::vector<Scalar> oracle(4 * d + 1);
  for (int N = 0; N <= 4 * d; ++N) oracle[N] = oracle_sup_error(s, N);
  for (int N = 0; N <= 4 * d; ++N)
    CHECK(fejer_sup_error(s, N) == doctest::Approx(oracle[N]).epsilon(1e-12));

  const Scalar target = oracle[4 * d] * 1.0000001;
  const FejerResult res = fejer_uniform_degree(s, target);
  CHECK(res.degree <= 4 * d);
  CHECK(res.achieved_sup_error < target);
  // Cesaro damping: |a_j| = (1 - |j|/(N+1)) |A_j| <= |A_j| pointwise.
  for (const auto& [n, profile] : res.cesaro.modes(0)) {
    const Scalar w = 1.0 - std::abs(n) / (res.degree + 1.0);
    for (int i = 0; i < grid.n_radii(); ++i) {
      const Complex aj = profile.samples()[i];
      const Complex Aj = s.modes(0).at(n).samples()[i];
      CHECK(std::abs(aj) <= std::abs(Aj) + 1e-15);
      CHECK(std::abs(aj - w * Aj) < 1e-14);
    }
  }
}

TEST_CASE("fejer: constant map needs degree 0") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto s = make_series(grid, {{0, [](Scalar) { return Complex(0.4, 0.1); }}});
  const FejerResult res = fejer_uniform_degree(s, 1e-12);
  CHECK(res.degree == 0);
  CHECK(res.achieved_sup_error == 0.0);
  CHECK(std::abs(res.cesaro.modes(0).at(0).samples()[0] - Complex(0.4, 0.1)) < 1e-15);
}

TEST_CASE("fejer: single-negative-mode input damps by N/(N+1)") {
  // chi(r)/r-style mode; target 0.01 leaves the damped profile at exactly
  // (N/(N+1)) of the input.
  const PolarGrid grid = PolarGrid::make_default();
  const auto s = make_series(grid, {{-1, [](Scalar r) {
    return Complex(0.75 * r * (2 - r), 0);
  }}});
  const FejerResult res = fejer_uniform_degree(s, 0.01);
  CHECK(res.achieved_sup_error < 0.01);
  const Scalar w = res.degree / (res.degree + 1.0);
  for (int i = 0; i < grid.n_radii(); ++i)
    CHECK(std::abs(res.cesaro.modes(0).at(-1).samples()[i] -
                   w * s.modes(0).at(-1).samples()[i]) < 1e-15);
}

TEST_CASE("fejer: monotone improvement and band-limited error bound") {
  PolarGrid grid(PolarGrid::make_default().radii(), 256);
  const auto s = make_series(
      grid, {{-2, [](Scalar r) { return Complex(0.3 * r, 0.1 * r); }},
             {1, [](Scalar r) { return Complex(0.25 * r, 0); }}});
  Scalar prev = std::numeric_limits<Scalar>::infinity();
  for (int N = 0; N <= 24; ++N) {
    const Scalar e = fejer_sup_error(s, N);
    CHECK(e <= prev + 1e-15);
    prev = e;
    if (N >= 2) {
      // Band-limited bound: sum_j (|j|/(N+1)) sup |A_j|.
      Scalar bound = 0;
      for (const auto& [n, profile] : s.modes(0))
        bound += std::abs(n) / (N + 1.0) * profile.max_abs();
      CHECK(e <= bound + 1e-15);
    }
  }
  CHECK_THROWS_AS(fejer_uniform_degree(s, 1e-300), ResolutionError);
}
