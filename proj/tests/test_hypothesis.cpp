#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hartogs/hypothesis.hpp"
#include "hartogs/radial_fourier.hpp"
#include "hartogs/worked_examples.hpp"

using namespace hartogs;

namespace {

RadialModeSeries one_mode(const PolarGrid& grid, int n,
                          std::function<Complex(Scalar)> fn) {
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(n, RadialProfile(grid.radii(), std::move(fn)));
  return RadialModeSeries(grid, std::move(mm));
}

}  // namespace

TEST_CASE("boundary_sup") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto half_z = one_mode(grid, 1, [](Scalar r) { return Complex(0.5 * r, 0); });
  CHECK(boundary_sup(half_z)[0] == doctest::Approx(0.5).epsilon(1e-14));

  // The totally-real disc function vanishes identically on the boundary.
  const auto g = wermer_series(1.0);
  CHECK(boundary_sup(g)[0] < 1e-14);

  // Cutoff configuration: sup on the boundary is the plateau value.
  const auto cut = cutoff_series(3);
  CHECK(boundary_sup(cut)[0] == doctest::Approx(3.5 / 4).epsilon(1e-14));
}

TEST_CASE("chirka condition margin") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto half_z = one_mode(grid, 1, [](Scalar r) { return Complex(0.5 * r, 0); });
  CHECK(chirka_condition_margin(half_z)[0] == doctest::Approx(0.5).epsilon(1e-13));

  // Cutoff: r |A_{-1}(r)| = chi(r), margin 1/(2(N+1)) attained on the plateau.
  for (int n : {1, 4}) {
    const auto cut = cutoff_series(n);
    CHECK(chirka_condition_margin(cut)[0] ==
          doctest::Approx(1.0 / (2.0 * (n + 1))).epsilon(1e-12));
  }

  // Rescaled totally-real map: massive violation.
  const auto scaled = wermer_series(1.0 / 0.0061);
  const Scalar margin = chirka_condition_margin(scaled)[0];
  CHECK(margin < 0);
  // max_r r |A_{-1}(r)| on the grid is 1 - margin, close to 0.456/0.0061.
  CHECK(1 - margin > 74);
}

TEST_CASE("classify verdicts and preference") {
  const PolarGrid grid = PolarGrid::make_default();

  // F(z) = 0.5 z satisfies both criteria; the positive-modes one wins.
  const auto half_z = one_mode(grid, 1, [](Scalar r) { return Complex(0.5 * r, 0); });
  CHECK(classify(half_z).verdict == Verdict::thm_1_2);

  // Cutoff keeps a negative mode, so only the two-sided criterion applies.
  CHECK(classify(cutoff_series(2)).verdict == Verdict::thm_1_1);

  // Rescaled totally-real map: no criterion.
  const auto scaled = wermer_series(1.0 / 0.0061);
  const auto rep = classify(scaled);
  CHECK(rep.verdict == Verdict::none);
  CHECK(rep.condition_margin[0] < 0);
  CHECK(rep.has_negative_modes[0]);

  // Two components, both small: vector-valued verdict.
  std::vector<RadialModeSeries::ModeMap> mm(2);
  mm[0].emplace(1, RadialProfile(grid.radii(), [](Scalar r) { return Complex(0.3 * r, 0); }));
  mm[1].emplace(-1, RadialProfile(grid.radii(), [](Scalar r) { return Complex(0.2 * r, 0); }));
  const RadialModeSeries pair(grid, std::move(mm));
  CHECK(classify(pair).verdict == Verdict::thm_1_3);
}

TEST_CASE("scaling covariance of the margin") {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(-2, RadialProfile(grid.radii(), [](Scalar r) { return Complex(0.3 * r * r, 0.1 * r); }));
  mm[0].emplace(1, RadialProfile(grid.radii(), [](Scalar r) { return Complex(0.2 * r, 0); }));
  const RadialModeSeries f(grid, std::move(mm));
  const Scalar m1 = chirka_condition_margin(f)[0];
  for (Scalar t : {0.25, 0.5, 0.75}) {
    std::vector<RadialModeSeries::ModeMap> mt(1);
    mt[0].emplace(-2, RadialProfile(grid.radii(), [t](Scalar r) { return t * Complex(0.3 * r * r, 0.1 * r); }));
    mt[0].emplace(1, RadialProfile(grid.radii(), [t](Scalar r) { return t * Complex(0.2 * r, 0); }));
    const RadialModeSeries ft(grid, std::move(mt));
    const Scalar mt_margin = chirka_condition_margin(ft)[0];
    CHECK(mt_margin == doctest::Approx(1 - t * (1 - m1)).epsilon(1e-12));
  }
}

TEST_CASE("constant-mode margin and fact violation") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto c = one_mode(grid, 0, [](Scalar r) { return Complex(0.3 + 0.2 * r, 0); });
  CHECK(chirka_condition_margin(c)[0] == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(classify(c).fact_violation == 0.0);

  // A profile that violates continuity at the origin is reported, not fixed.
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(1, RadialProfile(grid.radii(),
                                 ArrayXcd::Constant(grid.n_radii(), Complex(0.1, 0)),
                                 Complex(0.07, 0)));
  const RadialModeSeries bad(grid, std::move(mm));
  CHECK(classify(bad).fact_violation == doctest::Approx(0.07));
}

TEST_CASE("series from samples never violates the origin fact") {
  const PolarGrid grid = PolarGrid::make_default();
  const auto cut = cutoff_series(2);
  const auto from_samples =
      modes_from_samples(samples_from_modes(cut, grid), 3);
  CHECK(from_samples.fact_violation() == 0.0);
}
