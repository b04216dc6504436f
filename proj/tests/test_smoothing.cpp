#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hartogs/smoothing.hpp"

using namespace hartogs;

TEST_CASE("smooth switch endpoints and midpoint") {
  for (auto [a, b] : std::vector<std::pair<Scalar, Scalar>>{
           {0.0, 0.5}, {0.1, 0.9}, {0.3, 0.4}, {0.0, 1e-6}}) {
    const SmoothSwitch s(a, b);
    CHECK(s(a) == 0.0);
    CHECK(s(b) == 1.0);
    CHECK(s(a - 0.1) == 0.0);
    CHECK(s(b + 0.1) == 1.0);
    // Kernel symmetry: exact up to cancellation in (r - a) at offset windows.
    CHECK(s((a + b) / 2) == doctest::Approx(0.5).epsilon(1e-8));
    // Monotone on a scan.
    Scalar prev = 0;
    for (int k = 0; k <= 64; ++k) {
      const Scalar v = s(a + (b - a) * k / 64);
      CHECK(v >= prev - 1e-15);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      prev = v;
    }
  }
  CHECK_THROWS_AS(SmoothSwitch(0.5, 0.5), DomainError);
  CHECK_THROWS_AS(SmoothSwitch(0.7, 0.3), DomainError);
}

TEST_CASE("smooth switch slope bound: max |S'| (b-a) <= 2.5") {
  // Dense scan of the closed form; the slope scales like 1/(b-a).
  for (auto [a, b] : std::vector<std::pair<Scalar, Scalar>>{
           {0.0, 1.0}, {0.2, 0.3}, {0.3, 0.4}, {0.0, 1e-4}}) {
    const SmoothSwitch s(a, b);
    const Scalar w = b - a;
    Scalar max_slope = 0;
    const int n = 20000;
    for (int k = 0; k < n; ++k) {
      const Scalar x0 = a + w * k / n;
      const Scalar x1 = a + w * (k + 1) / n;
      max_slope = std::max(max_slope, std::abs(s(x1) - s(x0)) / (x1 - x0));
    }
    CHECK(max_slope * w <= 2.5);
    CHECK(max_slope * w > 1.5);  // sanity: the bound is not vacuous
  }
}

TEST_CASE("smooth switch is numerically flat at its lower edge") {
  const SmoothSwitch s(0.0, 0.4);
  const auto d = derivatives_at_zero(
      [&s](Scalar r) { return Complex(s(r), 0); }, std::min(1e-3, 0.4 / 64));
  for (int k = 1; k <= kFlatOrder; ++k) CHECK(std::abs(d[k]) < kTolFlat);
}

TEST_CASE("mollify: polynomial derivatives survive") {
  const PolarGrid grid = PolarGrid::make_default();
  const Complex c0(0.05, -0.02), c1(-0.1, 0.04), c2(0.3, 0.1);
  const RadialProfile p(grid.radii(), [=](Scalar r) {
    return c0 + c1 * r + c2 * r * r;
  });
  for (int order : {2, 4}) {
    const SmoothProfile m = mollify_profile(p, 1e-8, order);
    CHECK(m.achieved_error() <= 1e-8);
    const auto& d = m.derivs_at_zero();
    CHECK(std::abs(d[0] - c0) < 1e-4);
    CHECK(std::abs(d[1] - c1) < 1e-4);
    CHECK(std::abs(d[2] - 2.0 * c2) < 1e-3);
  }
}

TEST_CASE("mollify: zero profile stays zero") {
  const PolarGrid grid = PolarGrid::make_default();
  const RadialProfile p(grid.radii(), ArrayXcd::Zero(grid.n_radii()),
                        Complex(0, 0));
  const SmoothProfile m = mollify_profile(p, 1e-10);
  for (Scalar r : {0.0, 0.3, 0.77, 1.0}) CHECK(std::abs(m(r)) == 0.0);
}

TEST_CASE("mollify: generous budget returns immediately and within budget") {
  const PolarGrid grid = PolarGrid::make_default();
  const RadialProfile p(grid.radii(), [](Scalar r) {
    return Complex(std::sin(20 * r), std::cos(13 * r));
  });
  const Scalar budget = 2.5;  // >= 2 sup |p|
  const SmoothProfile m = mollify_profile(p, budget);
  Scalar worst = 0;
  for (int k = 0; k <= 512; ++k) {
    const Scalar r = static_cast<Scalar>(k) / 512;
    worst = std::max(worst, std::abs(m(r) - p(r)));
  }
  CHECK(worst <= budget);
  CHECK(m.bandwidth() == doctest::Approx(0.2));
}

TEST_CASE("mollify: budget below the bandwidth floor errors out") {
  const PolarGrid grid = PolarGrid::make_default();
  // A profile with an unresolvable kink at machine budget.
  ArrayXcd samples(grid.n_radii());
  for (int i = 0; i < grid.n_radii(); ++i)
    samples[i] = Complex(std::abs(grid.radii()[i] - 0.5), 0);
  const RadialProfile p(grid.radii(), samples, Complex(0.5, 0));
  CHECK_THROWS_AS(mollify_profile(p, 1e-13), ResolutionError);
}

TEST_CASE("mollify: smaller budgets never increase the achieved error") {
  const PolarGrid grid = PolarGrid::make_default();
  const RadialProfile p(grid.radii(), [](Scalar r) {
    return Complex(0.4 / (1 + 10 * r * r), 0.1 * r);
  });
  Scalar prev = std::numeric_limits<Scalar>::infinity();
  for (Scalar budget : {1e-2, 1e-4, 1e-6}) {
    const SmoothProfile m = mollify_profile(p, budget);
    CHECK(m.achieved_error() <= budget);
    CHECK(m.achieved_error() <= prev);
    prev = m.achieved_error();
  }
}
