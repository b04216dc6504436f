#pragma once

#include "hartogs/mode_series.hpp"

namespace hartogs {

// Cesaro (Fejer) summation state: the smallest degree N meeting the target
// together with the damped profiles a_j(r) = (1 - |j|/(N+1)) A_j(r).
struct FejerResult {
  int degree = 0;
  RadialModeSeries cesaro;
  Scalar achieved_sup_error = 0;
  Scalar target = 0;
};

// Angular DFT at every grid radius: A_{jn}(r_i) for |n| <= max_mode. The
// r = 0 entries are set directly: 0 for n != 0, and the quadratic
// extrapolation of the n = 0 profile through the three smallest radii.
RadialModeSeries modes_from_samples(const DiscSample& sample, int max_mode);

// Pointwise reconstruction of the series on a grid.
DiscSample samples_from_modes(const RadialModeSeries& series,
                              const PolarGrid& grid);

// Sup over the grid (all radii, all angles, all components) of
// |F - sigma_N(F)|, where sigma_N is the degree-N Cesaro mean.
Scalar fejer_sup_error(const RadialModeSeries& series, int N);

// Smallest N (doubling search, then bisection) with
// fejer_sup_error(series, N) < target. Throws ResolutionError if the
// angular grid cannot certify the required degree.
FejerResult fejer_uniform_degree(const RadialModeSeries& series, Scalar target);

}  // namespace hartogs
