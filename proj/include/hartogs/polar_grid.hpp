#pragma once

#include <vector>

#include "hartogs/types.hpp"

namespace hartogs {

// Discretization of the closed unit disc: strictly increasing radii in
// (0, 1] with 1 included, and a power-of-two count of equispaced angles
// theta_k = 2*pi*k/n_theta. r = 0 is deliberately not a grid node; data
// attached to the origin travels separately (see RadialModeSeries).
class PolarGrid {
 public:
  PolarGrid(ArrayXd radii, int n_theta);

  // 64 radii clustered toward both 0 and 1 (cosine spacing), n_theta at
  // least 256 and large enough for the requested mode band.
  static PolarGrid make_default(int max_mode = 8, int n_radii = 64,
                                Scalar r_min = 0.01);

  const ArrayXd& radii() const { return radii_; }
  int n_radii() const { return static_cast<int>(radii_.size()); }
  int n_theta() const { return n_theta_; }
  Scalar r_min() const { return radii_[0]; }
  Scalar theta(int k) const;
  const ArrayXd& thetas() const { return thetas_; }

  // Anti-aliasing headroom for tracked modes up to |n|.
  bool supports_mode(int n) const { return n_theta_ >= 4 * std::abs(n) + 4; }

  bool operator==(const PolarGrid& o) const {
    return n_theta_ == o.n_theta_ && radii_.size() == o.radii_.size() &&
           (radii_ == o.radii_).all();
  }

 private:
  ArrayXd radii_;
  ArrayXd thetas_;
  int n_theta_;
};

// Sampled values of a map D-bar -> C^m on a polar grid.
class DiscSample {
 public:
  DiscSample(PolarGrid grid, std::vector<ArrayXXcd> values);

  const PolarGrid& grid() const { return grid_; }
  int components() const { return static_cast<int>(values_.size()); }
  // (n_radii x n_theta) table of component j.
  const ArrayXXcd& values(int j) const { return values_.at(j); }
  ArrayXXcd& values(int j) { return values_.at(j); }

 private:
  PolarGrid grid_;
  std::vector<ArrayXXcd> values_;
};

}  // namespace hartogs
