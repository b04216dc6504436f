#pragma once

#include "hartogs/mode_series.hpp"

namespace hartogs {

// Which extension criterion a configuration meets. Thm1_2 is the
// positive-modes-only criterion (m = 1, no mode condition needed); Thm1_1
// and Thm1_3 are the scalar / vector-valued mode-condition criteria.
enum class Verdict { thm_1_1, thm_1_2, thm_1_3, none };

const char* to_string(Verdict v);

struct HypothesisReport {
  std::vector<Scalar> boundary_sup;      // per component, sup over |zeta| = 1
  std::vector<Scalar> condition_margin;  // per component, min_r (1 - sum)
  std::vector<bool> has_negative_modes;  // per component
  Scalar fact_violation = 0;             // max |A_{jn}(0)| over n != 0
  Verdict verdict = Verdict::none;
  bool smallest_radius_flag = false;     // mode sum near 1 below the grid
};

// max over the angle grid of |F_j(e^{i theta})| per component.
std::vector<Scalar> boundary_sup(const RadialModeSeries& series);

// Per component: min over grid radii of 1 - sum_n |A_{jn}(r)| / r^n.
// Negative margin means the mode condition fails.
std::vector<Scalar> chirka_condition_margin(const RadialModeSeries& series);

HypothesisReport classify(const RadialModeSeries& series);

}  // namespace hartogs
