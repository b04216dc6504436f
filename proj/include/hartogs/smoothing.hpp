#pragma once

#include "hartogs/mode_series.hpp"

namespace hartogs {

// Smooth switch built from the flat kernel phi(t) = exp(-1/t):
//   S = phi(r-a) / (phi(r-a) + phi(b-r)),
// identically 0 on (-inf, a], identically 1 on [b, inf). Evaluated in the
// exponent domain so arbitrarily narrow windows stay free of underflow.
class SmoothSwitch {
 public:
  SmoothSwitch(Scalar a, Scalar b);
  Scalar operator()(Scalar r) const;
  Scalar lower() const { return a_; }
  Scalar upper() const { return b_; }

 private:
  Scalar a_, b_;
};

inline SmoothSwitch smooth_transition(Scalar a, Scalar b) {
  return SmoothSwitch(a, b);
}

// Result of Gaussian mollification: uniform fine samples on [0, 1] with a
// shape-preserving cubic accessor, the settled bandwidth, the achieved sup
// deviation from the input, and derivative estimates at r = 0.
class SmoothProfile {
 public:
  SmoothProfile() = default;
  SmoothProfile(ArrayXd x, ArrayXcd y, Scalar bandwidth, Scalar achieved);

  Complex operator()(Scalar r) const;
  Scalar bandwidth() const { return bandwidth_; }
  Scalar achieved_error() const { return achieved_; }
  const std::array<Complex, kFlatOrder + 1>& derivs_at_zero() const {
    return derivs0_;
  }

 private:
  std::shared_ptr<const PchipInterpolant> interp_;
  Scalar bandwidth_ = 0;
  Scalar achieved_ = 0;
  std::array<Complex, kFlatOrder + 1> derivs0_{};
};

// Gaussian-kernel smoothing in r on [0, 1]. The bandwidth is halved until
// the sup deviation from p on the working grid is within budget; beyond the
// finest resolvable bandwidth a ResolutionError is thrown. End behaviour
// continues the boundary cubics of p, so polynomial inputs keep their
// derivatives at the endpoints.
//
// order = 2 is a plain (convex-average) Gaussian; order = 4 is the
// Richardson combination 2 G_{h/sqrt2} - G_h, which cancels the h^2 error
// term and reaches tight budgets on steep profiles at far coarser
// bandwidths, at the price of the convex-average bound.
SmoothProfile mollify_profile(const RadialProfile& p, Scalar budget,
                              int order = 2);

}  // namespace hartogs
