#include "hartogs/hypothesis.hpp"

#include <cmath>

namespace hartogs {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::thm_1_1: return "Thm1.1";
    case Verdict::thm_1_2: return "Thm1.2";
    case Verdict::thm_1_3: return "Thm1.3";
    default: return "none";
  }
}

std::vector<Scalar> boundary_sup(const RadialModeSeries& series) {
  const PolarGrid& grid = series.grid();
  std::vector<Scalar> out(series.components(), 0.0);
  for (int j = 0; j < series.components(); ++j) {
    Scalar sup = 0;
    for (int k = 0; k < grid.n_theta(); ++k)
      sup = std::max(sup, std::abs(evaluate(series, 1.0, grid.theta(k), j)));
    out[j] = sup;
  }
  return out;
}

namespace {

Scalar mode_sum_at(const RadialModeSeries& series, int j, Scalar r) {
  Scalar sum = 0;
  for (const auto& [n, profile] : series.modes(j))
    sum += std::abs(profile(r)) * std::pow(r, -n);
  return sum;
}

}  // namespace

std::vector<Scalar> chirka_condition_margin(const RadialModeSeries& series) {
  const PolarGrid& grid = series.grid();
  std::vector<Scalar> out(series.components(), 1.0);
  for (int j = 0; j < series.components(); ++j) {
    Scalar worst = 0;
    for (int i = 0; i < grid.n_radii(); ++i)
      worst = std::max(worst, mode_sum_at(series, j, grid.radii()[i]));
    out[j] = 1.0 - worst;
  }
  return out;
}

HypothesisReport classify(const RadialModeSeries& series) {
  HypothesisReport rep;
  rep.boundary_sup = boundary_sup(series);
  rep.condition_margin = chirka_condition_margin(series);
  rep.fact_violation = series.fact_violation();
  for (int j = 0; j < series.components(); ++j)
    rep.has_negative_modes.push_back(series.has_negative_modes(j));

  // Probe the mode sum below the smallest grid radius through the
  // interpolated profiles; the grid cannot certify (0, r_min) directly.
  const Scalar r_min = series.grid().r_min();
  for (int j = 0; j < series.components() && !rep.smallest_radius_flag; ++j)
    for (int k = 1; k <= 4; ++k)
      if (mode_sum_at(series, j, r_min / (1 << k)) > 1.0 - 10 * kTolFft) {
        rep.smallest_radius_flag = true;
        break;
      }

  bool sup_ok = true, margin_ok = true, any_negative = false;
  for (int j = 0; j < series.components(); ++j) {
    sup_ok = sup_ok && rep.boundary_sup[j] < 1.0;
    margin_ok = margin_ok && rep.condition_margin[j] > 0.0;
    any_negative = any_negative || rep.has_negative_modes[j];
  }
  if (series.components() == 1) {
    if (sup_ok && !any_negative)
      rep.verdict = Verdict::thm_1_2;  // preferred: needs no mode condition
    else if (sup_ok && margin_ok)
      rep.verdict = Verdict::thm_1_1;
  } else if (sup_ok && margin_ok) {
    rep.verdict = Verdict::thm_1_3;
  }
  return rep;
}

}  // namespace hartogs
