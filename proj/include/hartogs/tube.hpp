#pragma once

#include "hartogs/mode_series.hpp"

namespace hartogs {

// Concrete neighbourhood model for the configuration set: a fiberwise tube
// of radius graph_radius around the graph of the centre map, united with a
// boundary collar {1 - collar_width < |zeta| < 1 + collar_width} x D^m.
class TubeNeighborhood {
 public:
  TubeNeighborhood(RadialModeSeries center, Scalar graph_radius,
                   Scalar collar_width);

  const RadialModeSeries& center() const { return center_; }
  Scalar graph_radius() const { return graph_radius_; }
  Scalar collar_width() const { return collar_width_; }
  // Inner fiber radius used by the accumulation-set certificate: points
  // (zeta, w) with |zeta| < delta0 and fiber distance < graph_radius/2 are
  // always members.
  Scalar delta0() const { return center_.grid().r_min(); }

  // max_j |w_j - F_j(zeta)|; requires |zeta| <= 1.
  Scalar fiber_distance(Complex zeta, const VectorXcd& w) const;

  // Signed violation of the graph-tube route (negative means inside).
  Scalar graph_signed(Complex zeta, const VectorXcd& w) const;
  // Signed violation of the collar route.
  Scalar collar_signed(Complex zeta, const VectorXcd& w) const;
  // min of the two routes.
  Scalar signed_distance(Complex zeta, const VectorXcd& w) const;

 private:
  RadialModeSeries center_;
  Scalar graph_radius_;
  Scalar collar_width_;
};

bool tube_contains(const TubeNeighborhood& tube, Complex zeta,
                   const VectorXcd& w);

}  // namespace hartogs
