#include "hartogs/smoothing.hpp"

#include <cmath>
#include <numbers>

namespace hartogs {

SmoothSwitch::SmoothSwitch(Scalar a, Scalar b) : a_(a), b_(b) {
  if (!(a >= 0) || !(a < b) || !(b <= 1))
    throw DomainError("smooth_transition: need 0 <= a < b <= 1");
}

Scalar SmoothSwitch::operator()(Scalar r) const {
  if (r <= a_) return 0.0;
  if (r >= b_) return 1.0;
  // Window-normalized coordinate keeps the transition profile independent of
  // b - a; the unnormalized kernel concentrates its rise in an O((b-a)^2)
  // core on narrow windows. phi(1-u)/phi(u) = exp(1/u - 1/(1-u)); only the
  // exponent is formed, so arbitrarily narrow windows stay underflow-free.
  const Scalar u = (r - a_) / (b_ - a_);
  const Scalar e = 1.0 / u - 1.0 / (1.0 - u);
  if (e > 745.0) return 0.0;
  if (e < -745.0) return 1.0;
  return 1.0 / (1.0 + std::exp(e));
}

SmoothProfile::SmoothProfile(ArrayXd x, ArrayXcd y, Scalar bandwidth,
                             Scalar achieved)
    : bandwidth_(bandwidth), achieved_(achieved) {
  interp_ = std::make_shared<PchipInterpolant>(std::move(x), std::move(y));
  const Scalar d = std::min(0.01, std::max(bandwidth_, 1e-6));
  derivs0_ = derivatives_at_zero(
      [this](Scalar r) { return interp_->eval_extended(r); }, d);
}

Complex SmoothProfile::operator()(Scalar r) const {
  return interp_->eval_extended(r);
}

SmoothProfile mollify_profile(const RadialProfile& p, Scalar budget,
                              int order) {
  if (!(budget > 0)) throw DomainError("mollify: budget must be > 0");
  if (order != 2 && order != 4)
    throw DomainError("mollify: kernel order must be 2 or 4");

  constexpr int kKernelSigmas = 6;   // kernel truncation radius in units of h
  constexpr int kPointsPerH = 4;     // grid points per bandwidth
  constexpr long kMaxPoints = 1 << 21;

  for (Scalar h = 0.2;; h /= 2) {
    const Scalar dx = h / kPointsPerH;
    const long m = std::lround(1.0 / dx);
    if (m > kMaxPoints)
      throw ResolutionError("mollify: bandwidth underflow before budget met");

    const int kr = kKernelSigmas * kPointsPerH;  // kernel half-width in points
    ArrayXd weights(2 * kr + 1);
    auto fill_gaussian = [&](ArrayXd& w, Scalar sigma) {
      for (int i = -kr; i <= kr; ++i)
        w[i + kr] = std::exp(-0.5 * (i * dx) * (i * dx) / (sigma * sigma));
      w /= w.sum();
    };
    if (order == 2) {
      fill_gaussian(weights, h);
    } else {
      // 2 G_{h/sqrt2} - G_h cancels the leading h^2 smoothing error.
      ArrayXd narrow(2 * kr + 1), wide(2 * kr + 1);
      fill_gaussian(narrow, h / std::numbers::sqrt2);
      fill_gaussian(wide, h);
      weights = 2 * narrow - wide;
    }

    // Input sampled on the extended working grid.
    ArrayXcd src(m + 1 + 2 * kr);
    for (long i = 0; i < src.size(); ++i)
      src[i] = p.eval_extended((i - kr) * dx);

    ArrayXd x(m + 1);
    ArrayXcd y(m + 1);
    Scalar err = 0;
    for (long i = 0; i <= m; ++i) {
      Complex acc = 0;
      for (int k = -kr; k <= kr; ++k) acc += weights[k + kr] * src[i + kr + k];
      x[i] = i * dx;
      y[i] = acc;
      err = std::max(err, std::abs(acc - src[i + kr]));
    }
    if (m < 8192) {
      // Coarse working grid: also check the returned interpolant against p
      // on a refined grid before accepting.
      PchipInterpolant fine(x, y);
      for (int i = 0; i <= 8192; ++i) {
        const Scalar r = static_cast<Scalar>(i) / 8192;
        err = std::max(err, std::abs(fine.eval_extended(r) - p.eval_extended(r)));
      }
    }
    if (err <= budget)
      return SmoothProfile(std::move(x), std::move(y), h, err);
  }
}

}  // namespace hartogs
