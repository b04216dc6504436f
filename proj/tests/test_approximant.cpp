#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hartogs/approximant.hpp"
#include "hartogs/worked_examples.hpp"

using namespace hartogs;

namespace {

RadialModeSeries half_z() {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(1, RadialProfile(grid.radii(),
                                 [](Scalar r) { return Complex(0.5 * r, 0); }));
  return RadialModeSeries(grid, std::move(mm));
}

RadialModeSeries mixed_modes() {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(-2, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.25 * r * (1.3 - r), 0.1 * r);
  }));
  mm[0].emplace(0, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.1 + 0.07 * r * r, -0.05);
  }));
  mm[0].emplace(1, RadialProfile(grid.radii(), [](Scalar r) {
    return Complex(0.2 * r * (1.1 - 0.4 * r), 0.05 * r);
  }));
  return RadialModeSeries(grid, std::move(mm));
}

Scalar grid_sup_diff(const RadialModeSeries& a, const RadialModeSeries& b) {
  const PolarGrid& grid = a.grid();
  Scalar worst = 0;
  for (int i = 0; i < grid.n_radii(); ++i)
    for (int k = 0; k < grid.n_theta(); ++k)
      worst = std::max(worst,
                       std::abs(evaluate(a, grid.radii()[i], grid.theta(k), 0) -
                                evaluate(b, grid.radii()[i], grid.theta(k), 0)));
  return worst;
}

}  // namespace

TEST_CASE("build: linear map, two-sided route") {
  const auto f = half_z();
  const SmoothApproximant g =
      build_smooth_approximant(f, 0.1, ModeSign::two_sided);
  CHECK(grid_sup_diff(f, g.series()) < 0.1);
  CHECK(g.ledger().boundary_sup_g < 1.0);
  CHECK(g.ledger().margin_g > 0.0);
  // Mode-condition sum of G stays below 1 on the grid.
  const auto margins = chirka_condition_margin(g.series());
  CHECK(margins[0] > 0.0);
  const VerifyReport rep = verify_approximant(f, g);
  CHECK(rep.pass);
  for (const auto& row : rep.rows)
    if (row.required) CHECK(row.pass);
}

TEST_CASE("build: the zero map is its own approximant") {
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> mm(1);
  const RadialModeSeries f(grid, std::move(mm));
  const SmoothApproximant g = build_smooth_approximant(f, 0.05);
  CHECK(g.ledger().achieved_closeness == 0.0);
  CHECK(verify_approximant(f, g).pass);
}

TEST_CASE("build: cutoff configuration preserves a quarter of the margin") {
  const int n = 2;
  const auto f = cutoff_series(n);
  const Scalar epsilon = 1.0 / (8.0 * (n + 1));
  const SmoothApproximant g =
      build_smooth_approximant(f, epsilon, ModeSign::two_sided);
  CHECK(grid_sup_diff(f, g.series()) < epsilon);
  CHECK(g.ledger().margin_g >= 1.0 / (4.0 * (n + 1)));
  CHECK(g.ledger().boundary_sup_g < 1.0);
}

TEST_CASE("build: hypothesis gate") {
  const auto bad = wermer_series(1.0 / 0.0061);
  CHECK_THROWS_AS(build_smooth_approximant(bad, 0.1), HypothesisError);
  CHECK_THROWS_AS(build_smooth_approximant(bad, 0.1, ModeSign::two_sided),
                  HypothesisError);
  CHECK_THROWS_AS(build_smooth_approximant(half_z(), 0.0), DomainError);
}

TEST_CASE("budget ledger: achieved within allowed, conservation") {
  const auto f = mixed_modes();
  const SmoothApproximant g = build_smooth_approximant(f, 0.08);
  const BudgetLedger& led = g.ledger();
  CHECK(led.achieved.fejer < led.delta / 2);
  CHECK(led.achieved.b_negative <= led.per_mode_budget);
  CHECK(led.achieved.b_positive_inner <= led.per_mode_budget);
  CHECK(led.achieved.b_positive_outer <= led.per_mode_budget);
  CHECK(led.achieved.b_zero <= led.per_mode_budget);
  // Budget conservation: total deviation below the per-step sums and delta.
  const int n_modes = 3;
  const Scalar total = led.achieved.fejer +
                       n_modes * std::max({led.achieved.b_negative,
                                           led.achieved.b_positive_outer,
                                           led.achieved.b_zero});
  CHECK(led.achieved_closeness <= total + 1e-12);
  CHECK(led.achieved_closeness < led.delta);
  CHECK(led.delta <= led.epsilon);
}

TEST_CASE("monotonicity: smaller epsilon never loosens achieved errors") {
  const auto f = mixed_modes();
  const SmoothApproximant g1 = build_smooth_approximant(f, 0.08);
  const SmoothApproximant g2 = build_smooth_approximant(f, 0.02);
  CHECK(g2.ledger().achieved_closeness <= g1.ledger().achieved_closeness);
  CHECK(g2.ledger().achieved.fejer <= g1.ledger().achieved.fejer);
  CHECK(g2.ledger().achieved.b_negative <= g1.ledger().achieved.b_negative);
  CHECK(g2.ledger().achieved.b_zero <= g1.ledger().achieved.b_zero);
}

TEST_CASE("nonnegative-only route: negative modes vanish exactly") {
  const auto f = half_z();
  const SmoothApproximant g =
      build_smooth_approximant(f, 0.05, ModeSign::nonnegative_only);
  CHECK(g.mode_sign() == ModeSign::nonnegative_only);
  for (const auto& form : g.forms()[0]) CHECK(form.n >= 0);
  const VerifyReport rep = verify_approximant(f, g);
  CHECK(rep.pass);
  // Negative-mode families hold vacuously with full slack.
  const auto* row = rep.row("negbeer");
  REQUIRE(row != nullptr);
  CHECK(row->achieved == 0.0);
  CHECK(row->pass);
  CHECK(rep.row("negative_modes_zero")->pass);
  // Ratio families are reported but not binding on this route.
  CHECK_FALSE(rep.row("posbee1")->required);
}

TEST_CASE("flatness: positive-mode ratios stay bounded near the origin") {
  const auto f = mixed_modes();
  const SmoothApproximant g = build_smooth_approximant(f, 0.05);
  const Scalar r0 = g.ledger().r0;
  // alpha_j = B_j/r^j vanishes identically below r0/2 and stays within the
  // tracked ratio bound above.
  for (const auto& form : g.forms()[0]) {
    if (form.n < 1) continue;
    CHECK(std::abs(form.ratio(r0 / 4)) == 0.0);
    for (int k = 1; k <= 16; ++k) {
      const Scalar r = r0 * k / 16.0;
      CHECK(std::abs(form.ratio(r)) <= 1.0 + 1e-12);
    }
    for (int k = 1; k <= kFlatOrder; ++k)
      CHECK(form.flat_residual[k - 1] <= kTolFlat);
  }
  // Negative modes are numerically flat at 0 as well.
  for (const auto& form : g.forms()[0]) {
    if (form.n >= 0) continue;
    for (int k = 1; k <= kFlatOrder; ++k)
      CHECK(form.flat_residual[k - 1] <= kTolFlat);
  }
  // B_0 - B_0(0) vanishes to high order: orders 1..3 below tolerance.
  const ModeForm* b0 = g.form(0, 0);
  REQUIRE(b0 != nullptr);
  for (int k = 1; k <= 3; ++k) CHECK(b0->flat_residual[k - 1] <= kTolFlat);
}

TEST_CASE("verify: inflated coefficient fails the outer ratio family") {
  // G := F with the single coefficient inflated to 1.1 r, so the mode sum
  // equals 1.1 at every radius.
  const PolarGrid grid = PolarGrid::make_default();
  std::vector<RadialModeSeries::ModeMap> mm(1);
  mm[0].emplace(1, RadialProfile(grid.radii(),
                                 [](Scalar r) { return Complex(1.1 * r, 0); }));
  const RadialModeSeries inflated(grid, std::move(mm));
  const SmoothApproximant g = SmoothApproximant::from_series(inflated);
  const VerifyReport rep = verify_approximant(half_z(), g);
  CHECK_FALSE(rep.pass);
  const auto* row = rep.row("posbird2");
  REQUIRE(row != nullptr);
  CHECK(row->slack == doctest::Approx(-0.1).epsilon(1e-9));
  CHECK_FALSE(row->pass);
}

TEST_CASE("verify: pipeline output always passes") {
  for (Scalar eps : {0.2, 0.05}) {
    const auto f = mixed_modes();
    const SmoothApproximant g = build_smooth_approximant(f, eps);
    CHECK(verify_approximant(f, g).pass);
  }
}
