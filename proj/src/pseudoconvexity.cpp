#include "hartogs/pseudoconvexity.hpp"

#include <cmath>

#include "hartogs/numerics.hpp"

namespace hartogs {

namespace {

Complex fd_x(const ComplexField& f, Complex z, Scalar h) {
  return (f(z + h) - f(z - h)) / (2 * h);
}

Complex fd_y(const ComplexField& f, Complex z, Scalar h) {
  const Complex ih(0, h);
  return (f(z + ih) - f(z - ih)) / (2 * h);
}

}  // namespace

Complex wirtinger_dz(const ComplexField& f, Complex z, Scalar h) {
  return 0.5 * (fd_x(f, z, h) - Complex(0, 1) * fd_y(f, z, h));
}

Complex wirtinger_dzbar(const ComplexField& f, Complex z, Scalar h) {
  return 0.5 * (fd_x(f, z, h) + Complex(0, 1) * fd_y(f, z, h));
}

Complex wirtinger_dzzbar(const ComplexField& f, Complex z, Scalar h) {
  const Complex ih(0, h);
  const Complex lap =
      (f(z + h) + f(z - h) + f(z + ih) + f(z - ih) - 4.0 * f(z)) / (h * h);
  return 0.25 * lap;
}

Scalar total_reality_margin(const ComplexField& g, const PolarGrid& grid) {
  Scalar margin = std::numeric_limits<Scalar>::infinity();
  for (int i = 0; i < grid.n_radii(); ++i)
    for (int k = 0; k < grid.n_theta(); ++k) {
      const Complex z = std::polar(grid.radii()[i], grid.theta(k));
      margin = std::min(margin, std::abs(wirtinger_dzbar(g, z)));
    }
  margin = std::min(margin, std::abs(wirtinger_dzbar(g, Complex(0, 0))));
  return margin;
}

Scalar bs_pseudoconvexity_slack(const ComplexField& g, const RealField& u,
                                const PolarGrid& grid) {
  const ComplexField uc = [&u](Complex z) { return Complex(u(z), 0); };
  Scalar slack = std::numeric_limits<Scalar>::infinity();
  auto at = [&](Complex z) {
    const Scalar uv = u(z);
    const Complex gzb = wirtinger_dzbar(g, z);
    const Complex gzzb = wirtinger_dzzbar(g, z);
    const Complex uz = wirtinger_dz(uc, z);
    const Scalar uzzb = wirtinger_dzzbar(uc, z).real();
    const Scalar rhs = std::exp(2 * uv) * std::norm(gzb) -
                       std::exp(uv) * std::abs(gzzb + 2.0 * uz * gzb);
    return rhs + uzzb;  // rhs - (-u_zzbar)
  };
  for (int i = 0; i < grid.n_radii(); ++i)
    for (int k = 0; k < grid.n_theta(); ++k)
      slack = std::min(slack, at(std::polar(grid.radii()[i], grid.theta(k))));
  slack = std::min(slack, at(Complex(0, 0)));
  return slack;
}

Complex wermer_function(Complex z) {
  const Scalar r2 = std::norm(z);
  const Complex zb = std::conj(z);
  return zb * (1 - r2 * r2) + Complex(0, 1) * zb * (1 - r2);
}

Scalar wermer_delta_star_objective(Scalar r) {
  const Scalar r2 = r * r, r4 = r2 * r2;
  const Scalar num = (1 - 3 * r4) * (1 - 3 * r4) + (1 - 2 * r2) * (1 - 2 * r2);
  return num / (r * std::sqrt(36 * r4 + 4));
}

DeltaStarBound wermer_delta_star_bound(int scan_points) {
  const MinimizeResult res = scan_minimize(
      [](Scalar r) { return wermer_delta_star_objective(r); }, 1e-3, 1.0,
      scan_points, 1e-12);
  return {res.value, res.argmin};
}

}  // namespace hartogs
