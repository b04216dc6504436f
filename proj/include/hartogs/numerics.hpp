#pragma once

#include <array>
#include <optional>

#include "hartogs/types.hpp"

namespace hartogs {

// Shape-preserving (Fritsch-Carlson) piecewise-cubic Hermite interpolant,
// applied to real and imaginary parts independently. Reproduces linear data
// exactly and does not overshoot the local node range.
class PchipInterpolant {
 public:
  PchipInterpolant() = default;
  PchipInterpolant(ArrayXd x, ArrayXcd y);

  Complex operator()(Scalar x) const { return eval(x, false); }
  // Continues the end cubic segments outside [x_front, x_back].
  Complex eval_extended(Scalar x) const { return eval(x, true); }

  const ArrayXd& nodes() const { return x_; }
  const ArrayXcd& values() const { return y_; }
  bool empty() const { return x_.size() == 0; }

 private:
  Complex eval(Scalar x, bool extend) const;

  ArrayXd x_;
  ArrayXcd y_;
  ArrayXcd slope_;
};

// Fornberg weights for the m-th derivative at x0 from the given nodes.
// Exact for polynomials of degree < nodes.size().
ArrayXd fornberg_weights(Scalar x0, const ArrayXd& nodes, int m);

// One-sided finite-difference derivative estimates f^(k)(0), k = 0..kFlatOrder,
// from the 8 equispaced nodes {0, d, ..., 7d}.
std::array<Complex, kFlatOrder + 1> derivatives_at_zero(
    const std::function<Complex(Scalar)>& f, Scalar spacing);

// Golden-section minimization on [a, b] for a unimodal objective.
struct MinimizeResult {
  Scalar argmin = 0;
  Scalar value = 0;
};
MinimizeResult golden_section_minimize(const std::function<Scalar(Scalar)>& f,
                                       Scalar a, Scalar b, Scalar tol = 1e-12);

// Dense bracketing scan followed by golden-section refinement.
MinimizeResult scan_minimize(const std::function<Scalar(Scalar)>& f, Scalar a,
                             Scalar b, int scan_points, Scalar tol = 1e-12);

}  // namespace hartogs
