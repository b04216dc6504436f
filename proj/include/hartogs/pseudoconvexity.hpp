#pragma once

#include "hartogs/polar_grid.hpp"

namespace hartogs {

using ComplexField = std::function<Complex(Complex)>;
using RealField = std::function<Scalar(Complex)>;

// Wirtinger derivatives by centred finite differences in (x, y):
// d/dz = (d/dx - i d/dy)/2, d/dzbar = (d/dx + i d/dy)/2.
Complex wirtinger_dz(const ComplexField& f, Complex z, Scalar h = 1e-4);
Complex wirtinger_dzbar(const ComplexField& f, Complex z, Scalar h = 1e-4);
// Mixed second derivative d^2/(dz dzbar) = Laplacian/4.
Complex wirtinger_dzzbar(const ComplexField& f, Complex z, Scalar h = 1e-4);

// min over the grid of |dG/dzbar|: positive means the graph of G is totally
// real on the grid.
Scalar total_reality_margin(const ComplexField& g, const PolarGrid& grid);

// min over the grid of
//   e^{2u} |G_zbar|^2 - e^u |G_zzbar + 2 u_z G_zbar| + u_zzbar ;
// nonnegative certifies pseudoconvexity of |w - G(z)| = e^{-u(z)}.
Scalar bs_pseudoconvexity_slack(const ComplexField& g, const RealField& u,
                                const PolarGrid& grid);

struct DeltaStarBound {
  Scalar value = 0;
  Scalar argmin = 0;
};

// min over r in [0, 1] of ((1-3r^4)^2 + (1-2r^2)^2) / (r sqrt(36 r^4 + 4)),
// the admissible tube-radius bound for the Wermer graph. Bracketing scan
// plus golden-section refinement; the integrand blows up at r = 0, so the
// scan starts at 1e-3.
DeltaStarBound wermer_delta_star_bound(int scan_points = 1000);

// The Wermer disc function g(z, zbar) = zbar (1 - |z|^4) + i zbar (1 - |z|^2).
Complex wermer_function(Complex z);

// Closed form of the delta-star objective at radius r.
Scalar wermer_delta_star_objective(Scalar r);

}  // namespace hartogs
