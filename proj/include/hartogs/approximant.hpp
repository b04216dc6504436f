#pragma once

#include <optional>

#include "hartogs/hypothesis.hpp"
#include "hartogs/radial_fourier.hpp"
#include "hartogs/smoothing.hpp"

namespace hartogs {

enum class ModeSign { two_sided, nonnegative_only };

const char* to_string(ModeSign s);

struct AchievedBudgets {
  Scalar fejer = 0;             // sup |F - sigma_N|
  Scalar b_negative = 0;        // max_j sup |B_{-j} - a_{-j}|
  Scalar b_positive_inner = 0;  // max_j sup_{[0,R0]} |B_j - a_j|
  Scalar b_positive_outer = 0;  // max_j sup_{[R0,1]} |B_j - a_j|
  Scalar b_zero = 0;            // sup |B_0 - a_0|
};

// Constants of one construction run plus the achieved-vs-allowed record.
struct BudgetLedger {
  Scalar epsilon = 0;
  Scalar eta = 0;
  Scalar delta = 0;
  int degree = 0;   // Cesaro degree N
  Scalar r0 = 0;    // inner/outer split radius, delta/(4(2N+1))
  Scalar per_mode_budget = 0;      // allowed per coefficient, delta/(2(2N+1))
  int flat_order_checked = kFlatOrder;
  AchievedBudgets achieved;
  Scalar achieved_closeness = 0;   // sup_grid |F - G|
  Scalar boundary_sup_g = 1;       // sup over |zeta|=1 of |G|
  Scalar margin_g = 0;             // min_j grid margin of G
  Scalar eta_slack = 0;            // translate headroom min(1-sup, margin)
};

// One coefficient profile of the assembled approximant in constructive form.
// For n >= 1 (two-sided) `ratio` evaluates B_n(r)/r^n without division, so
// the mode-condition checks stay meaningful below the grid resolution.
struct ModeForm {
  int n = 0;
  std::function<Complex(Scalar)> value;
  std::function<Complex(Scalar)> ratio;
  std::array<Complex, kFlatOrder + 1> derivs0{};
  std::array<Scalar, kFlatOrder> flat_residual{};  // |d^k/dr^k| at 0, k=1..
};

// Smooth trigonometric-polynomial approximant G = sum B_n(r) e^{in theta}
// with its construction ledger.
class SmoothApproximant {
 public:
  SmoothApproximant(RadialModeSeries series, RadialModeSeries source,
                    RadialModeSeries cesaro, BudgetLedger ledger,
                    ModeSign mode_sign,
                    std::vector<std::vector<ModeForm>> forms);

  // Wraps an existing series without running the pipeline; the ledger is a
  // degenerate placeholder (delta = r0 = 0, a_j = B_j). Used for slicing and
  // verification of hand-made or deliberately broken inputs.
  static SmoothApproximant from_series(const RadialModeSeries& series,
                                       std::optional<ModeSign> sign = {});

  const RadialModeSeries& series() const { return series_; }
  const RadialModeSeries& source() const { return source_; }
  const RadialModeSeries& cesaro() const { return cesaro_; }
  const BudgetLedger& ledger() const { return ledger_; }
  ModeSign mode_sign() const { return mode_sign_; }
  const std::vector<std::vector<ModeForm>>& forms() const { return forms_; }

  const ModeForm* form(int j, int n) const;
  Complex mode_value(int j, int n, Scalar r) const;
  // |B_n|-ratio term of the mode condition at r: |B_n(r)| / r^n.
  Scalar mode_condition_term(int j, int n, Scalar r) const;

 private:
  RadialModeSeries series_;
  RadialModeSeries source_;
  RadialModeSeries cesaro_;
  BudgetLedger ledger_;
  ModeSign mode_sign_;
  std::vector<std::vector<ModeForm>> forms_;
};

// One row of the verification report. `strict` rows demand positive slack.
struct InequalityRow {
  std::string name;
  Scalar allowed = 0;
  Scalar achieved = 0;
  Scalar slack = 0;  // allowed - achieved
  bool strict = false;
  bool required = true;
  bool pass = true;
};

struct VerifyReport {
  std::vector<InequalityRow> rows;
  bool pass = true;
  const InequalityRow* row(const std::string& name) const;
};

// Full construction pipeline. Throws HypothesisError when the input meets no
// criterion for the requested mode sign, ResolutionError when the grids
// cannot certify the budgets, and ConstructionError when the assembled G
// fails its own verification.
SmoothApproximant build_smooth_approximant(const RadialModeSeries& series,
                                           Scalar epsilon,
                                           std::optional<ModeSign> sign = {});

// Evaluates the eight coefficient-sum inequality families split at R0, plus
// the closeness and boundary conditions. Failure is a report state.
VerifyReport verify_approximant(const RadialModeSeries& source,
                                const SmoothApproximant& g);

}  // namespace hartogs
