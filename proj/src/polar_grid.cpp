#include "hartogs/polar_grid.hpp"

#include <cmath>
#include <numbers>

#include "hartogs/dft.hpp"

namespace hartogs {

PolarGrid::PolarGrid(ArrayXd radii, int n_theta)
    : radii_(std::move(radii)), n_theta_(n_theta) {
  if (radii_.size() < 16) throw DomainError("polar grid: need >= 16 radii");
  if (!(radii_[0] > 0) || radii_[0] > 0.05)
    throw DomainError("polar grid: r_min must lie in (0, 0.05]");
  for (Eigen::Index i = 0; i + 1 < radii_.size(); ++i)
    if (!(radii_[i] < radii_[i + 1]))
      throw DomainError("polar grid: radii must be strictly increasing");
  if (radii_[radii_.size() - 1] != 1.0)
    throw DomainError("polar grid: radii must include r = 1");
  if (!is_power_of_two(n_theta_) || n_theta_ < 4)
    throw DomainError("polar grid: n_theta must be a power of two >= 4");
  thetas_.resize(n_theta_);
  for (int k = 0; k < n_theta_; ++k)
    thetas_[k] = 2 * std::numbers::pi * k / n_theta_;
}

Scalar PolarGrid::theta(int k) const { return thetas_[k]; }

PolarGrid PolarGrid::make_default(int max_mode, int n_radii, Scalar r_min) {
  ArrayXd radii(n_radii);
  for (int i = 0; i < n_radii; ++i) {
    const Scalar t =
        (1 - std::cos(std::numbers::pi * i / (n_radii - 1))) / 2;
    radii[i] = r_min + (1 - r_min) * t;
  }
  radii[n_radii - 1] = 1.0;
  const int n_theta =
      std::max(256, next_power_of_two(4 * std::abs(max_mode) + 4));
  return PolarGrid(std::move(radii), n_theta);
}

DiscSample::DiscSample(PolarGrid grid, std::vector<ArrayXXcd> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("disc sample: need >= 1 component");
  for (const auto& v : values_) {
    if (v.rows() != grid_.n_radii() || v.cols() != grid_.n_theta())
      throw DomainError("disc sample: table shape does not match grid");
    if (!v.real().isFinite().all() || !v.imag().isFinite().all())
      throw DomainError("disc sample: values must be finite");
  }
}

}  // namespace hartogs
