#pragma once

#include <map>
#include <memory>
#include <optional>

#include "hartogs/numerics.hpp"
#include "hartogs/polar_grid.hpp"

namespace hartogs {

// One radial coefficient profile A_n(r): samples on the grid radii plus an
// explicit value at r = 0. A profile may carry a closed-form evaluator, in
// which case it is evaluated exactly; otherwise evaluation goes through
// shape-preserving cubic interpolation over the nodes {0, r_1, ..., 1}.
class RadialProfile {
 public:
  RadialProfile() = default;
  RadialProfile(const ArrayXd& radii, ArrayXcd samples, Complex at_zero);
  // Closed-form profile; samples and the r = 0 value are taken from fn.
  // fn must be evaluable on a neighbourhood of [0, 1].
  RadialProfile(const ArrayXd& radii, std::function<Complex(Scalar)> fn);

  Complex operator()(Scalar r) const;
  // Evaluation slightly outside [0, 1] (closed form, or continued end cubic).
  Complex eval_extended(Scalar r) const;

  Complex at_zero() const { return at_zero_; }
  const ArrayXcd& samples() const { return samples_; }
  bool has_closed_form() const { return static_cast<bool>(fn_); }
  const std::function<Complex(Scalar)>& closed_form() const { return fn_; }
  Scalar max_abs() const;

  // Finite-difference derivative estimates at r = 0 (orders 0..kFlatOrder),
  // attached by the smoothing pipeline or computed on demand.
  void set_derivatives_at_zero(const std::array<Complex, kFlatOrder + 1>& d) {
    derivs0_ = d;
  }
  const std::optional<std::array<Complex, kFlatOrder + 1>>& derivatives_at_zero()
      const {
    return derivs0_;
  }

 private:
  ArrayXcd samples_;
  Complex at_zero_{0, 0};
  std::function<Complex(Scalar)> fn_;
  std::shared_ptr<const PchipInterpolant> interp_;
  std::optional<std::array<Complex, kFlatOrder + 1>> derivs0_;
};

// A map on the closed disc stored as finitely many radial Fourier-mode
// profiles per component: F_j(r e^{i theta}) = sum_n A_{jn}(r) e^{i n theta}.
class RadialModeSeries {
 public:
  using ModeMap = std::map<int, RadialProfile>;

  RadialModeSeries(PolarGrid grid, std::vector<ModeMap> modes);

  const PolarGrid& grid() const { return grid_; }
  int components() const { return static_cast<int>(modes_.size()); }
  const ModeMap& modes(int j) const { return modes_.at(j); }
  int degree_bound() const { return degree_bound_; }

  // Largest |A_{jn}(0)| over modes n != 0 (zero for any series whose
  // profiles honour continuity at the origin).
  Scalar fact_violation() const;
  bool has_negative_modes(int j) const;
  bool has_closed_forms() const;

 private:
  PolarGrid grid_;
  std::vector<ModeMap> modes_;
  int degree_bound_ = 0;
};

// Reconstruction sum_n A_{jn}(r) e^{i n theta}. At r = 0 only the n = 0
// profile contributes. Throws DomainError for r outside [0, 1].
Complex evaluate(const RadialModeSeries& series, Scalar r, Scalar theta, int j);

// All components at the point zeta = r e^{i theta}.
VectorXcd evaluate_point(const RadialModeSeries& series, Complex zeta);

}  // namespace hartogs
