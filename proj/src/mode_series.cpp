#include "hartogs/mode_series.hpp"

#include <cmath>

namespace hartogs {
namespace {

PchipInterpolant make_radial_interp(const ArrayXd& radii,
                                    const ArrayXcd& samples, Complex at_zero) {
  ArrayXd x(radii.size() + 1);
  ArrayXcd y(radii.size() + 1);
  x[0] = 0;
  y[0] = at_zero;
  x.tail(radii.size()) = radii;
  y.tail(radii.size()) = samples;
  return PchipInterpolant(std::move(x), std::move(y));
}

}  // namespace

RadialProfile::RadialProfile(const ArrayXd& radii, ArrayXcd samples,
                             Complex at_zero)
    : samples_(std::move(samples)), at_zero_(at_zero) {
  if (samples_.size() != radii.size())
    throw DomainError("radial profile: sample count != radii count");
  interp_ = std::make_shared<PchipInterpolant>(
      make_radial_interp(radii, samples_, at_zero_));
}

RadialProfile::RadialProfile(const ArrayXd& radii,
                             std::function<Complex(Scalar)> fn)
    : fn_(std::move(fn)) {
  samples_.resize(radii.size());
  for (Eigen::Index i = 0; i < radii.size(); ++i) samples_[i] = fn_(radii[i]);
  at_zero_ = fn_(0.0);
}

Complex RadialProfile::operator()(Scalar r) const {
  if (fn_) return fn_(r);
  if (r == 0.0) return at_zero_;
  return (*interp_)(r);
}

Complex RadialProfile::eval_extended(Scalar r) const {
  if (fn_) return fn_(r);
  return interp_->eval_extended(r);
}

Scalar RadialProfile::max_abs() const {
  Scalar m = std::abs(at_zero_);
  for (Eigen::Index i = 0; i < samples_.size(); ++i)
    m = std::max(m, std::abs(samples_[i]));
  return m;
}

RadialModeSeries::RadialModeSeries(PolarGrid grid, std::vector<ModeMap> modes)
    : grid_(std::move(grid)), modes_(std::move(modes)) {
  if (modes_.empty())
    throw DomainError("mode series: need >= 1 component");
  for (const auto& mm : modes_) {
    for (const auto& [n, profile] : mm) {
      if (profile.samples().size() != grid_.n_radii())
        throw DomainError("mode series: profile not sampled on the grid");
      degree_bound_ = std::max(degree_bound_, std::abs(n));
    }
  }
  if (!grid_.supports_mode(degree_bound_))
    throw AliasingError("mode series: angular grid too coarse for mode band");
}

Scalar RadialModeSeries::fact_violation() const {
  Scalar v = 0;
  for (const auto& mm : modes_)
    for (const auto& [n, profile] : mm)
      if (n != 0) v = std::max(v, std::abs(profile.at_zero()));
  return v;
}

bool RadialModeSeries::has_negative_modes(int j) const {
  for (const auto& [n, profile] : modes_.at(j))
    if (n < 0 && profile.max_abs() > 0) return true;
  return false;
}

bool RadialModeSeries::has_closed_forms() const {
  for (const auto& mm : modes_)
    for (const auto& [n, profile] : mm)
      if (!profile.has_closed_form()) return false;
  return true;
}

Complex evaluate(const RadialModeSeries& series, Scalar r, Scalar theta,
                 int j) {
  if (!(r >= 0.0) || r > 1.0)
    throw DomainError("evaluate: radius outside [0, 1]");
  const auto& mm = series.modes(j);
  if (r == 0.0) {
    auto it = mm.find(0);
    return it == mm.end() ? Complex(0, 0) : it->second.at_zero();
  }
  Complex acc = 0;
  for (const auto& [n, profile] : mm)
    acc += profile(r) * std::polar(1.0, n * theta);
  return acc;
}

VectorXcd evaluate_point(const RadialModeSeries& series, Complex zeta) {
  const Scalar r = std::abs(zeta);
  const Scalar theta = std::arg(zeta);
  VectorXcd out(series.components());
  for (int j = 0; j < series.components(); ++j)
    out[j] = evaluate(series, r, theta, j);
  return out;
}

}  // namespace hartogs
