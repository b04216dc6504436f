#include "hartogs/tube.hpp"

#include <cmath>
#include <limits>

namespace hartogs {

TubeNeighborhood::TubeNeighborhood(RadialModeSeries center, Scalar graph_radius,
                                   Scalar collar_width)
    : center_(std::move(center)),
      graph_radius_(graph_radius),
      collar_width_(collar_width) {
  if (!(graph_radius_ > 0)) throw DomainError("tube: graph radius must be > 0");
  if (collar_width_ < 0) throw DomainError("tube: collar width must be >= 0");
}

Scalar TubeNeighborhood::fiber_distance(Complex zeta, const VectorXcd& w) const {
  const VectorXcd f = evaluate_point(center_, zeta);
  Scalar d = 0;
  for (Eigen::Index j = 0; j < w.size(); ++j)
    d = std::max(d, std::abs(w[j] - f[j]));
  return d;
}

Scalar TubeNeighborhood::graph_signed(Complex zeta, const VectorXcd& w) const {
  if (std::abs(zeta) > 1.0) return std::numeric_limits<Scalar>::infinity();
  return fiber_distance(zeta, w) - graph_radius_;
}

Scalar TubeNeighborhood::collar_signed(Complex zeta, const VectorXcd& w) const {
  const Scalar r = std::abs(zeta);
  Scalar fiber = 0;
  for (Eigen::Index j = 0; j < w.size(); ++j)
    fiber = std::max(fiber, std::abs(w[j]));
  return std::max({(1 - collar_width_) - r, r - (1 + collar_width_),
                   fiber - 1});
}

Scalar TubeNeighborhood::signed_distance(Complex zeta, const VectorXcd& w) const {
  return std::min(graph_signed(zeta, w), collar_signed(zeta, w));
}

bool tube_contains(const TubeNeighborhood& tube, Complex zeta,
                   const VectorXcd& w) {
  if (w.size() != tube.center().components())
    throw DomainError("tube_contains: fiber dimension mismatch");
  return tube.signed_distance(zeta, w) < 0;
}

}  // namespace hartogs
