#include "hartogs/extension.hpp"

#include <cmath>
#include <numbers>

namespace hartogs {

const std::vector<ReferenceFunction>& builtin_references() {
  static const std::vector<ReferenceFunction> refs = [] {
    std::vector<ReferenceFunction> v;
    auto w0 = [](const VectorXcd& w) { return w.size() > 0 ? w[0] : Complex(0, 0); };
    v.push_back({"inv-3mzw",
                 [w0](Complex z, const VectorXcd& w) {
                   return 1.0 / (3.0 - z - w0(w));
                 },
                 [w0](Complex z, const VectorXcd& w) {
                   return 1.0 / (3.0 - z - w0(w));
                 },
                 "pole along z + w = 3 (outside the closed bidisc)"});
    v.push_back({"z2w",
                 [w0](Complex z, const VectorXcd& w) { return z * z * w0(w); },
                 [w0](Complex z, const VectorXcd& w) { return z * z * w0(w); },
                 "entire"});
    v.push_back({"z3w2",
                 [w0](Complex z, const VectorXcd& w) {
                   return z * z * z * w0(w) * w0(w);
                 },
                 [w0](Complex z, const VectorXcd& w) {
                   return z * z * z * w0(w) * w0(w);
                 },
                 "entire"});
    v.push_back({"inv-wm2",
                 [w0](Complex z, const VectorXcd& w) {
                   (void)z;
                   return 1.0 / (w0(w) - 2.0);
                 },
                 [w0](Complex z, const VectorXcd& w) {
                   (void)z;
                   return 1.0 / (w0(w) - 2.0);
                 },
                 "pole along w = 2, independent of z"});
    v.push_back({"inv-2mz-2pw",
                 [w0](Complex z, const VectorXcd& w) {
                   return 1.0 / ((2.0 - z) * (2.0 + w0(w)));
                 },
                 [w0](Complex z, const VectorXcd& w) {
                   return 1.0 / ((2.0 - z) * (2.0 + w0(w)));
                 },
                 "poles along z = 2 and w = -2"});
    v.push_back({"ratl-4mzw",
                 [w0](Complex z, const VectorXcd& w) {
                   return (z + w0(w)) / (4.0 - z * w0(w));
                 },
                 [w0](Complex z, const VectorXcd& w) {
                   return (z + w0(w)) / (4.0 - z * w0(w));
                 },
                 "pole along z w = 4 (outside the closed bidisc)"});
    return v;
  }();
  return refs;
}

const ReferenceFunction* find_reference(const std::string& name) {
  for (const auto& r : builtin_references())
    if (r.name == name) return &r;
  return nullptr;
}

Complex cauchy_slice_extend(const ReferenceFunction& f, Scalar rho, Complex z,
                            const VectorXcd& w, int quad_nodes) {
  if (!(std::abs(z) < rho))
    throw DomainError("cauchy_slice_extend: need |z| < rho");
  if (quad_nodes < 64)
    throw DomainError("cauchy_slice_extend: need >= 64 quadrature nodes");
  // (2 pi i)^{-1} \oint f/(zeta - z) dzeta with zeta = rho e^{i t}:
  // the trapezoid rule reduces to the mean of f * zeta / (zeta - z).
  Complex acc = 0;
  for (int k = 0; k < quad_nodes; ++k) {
    const Complex zeta =
        std::polar(rho, 2 * std::numbers::pi * k / quad_nodes);
    acc += f.f(zeta, w) * zeta / (zeta - z);
  }
  return acc / static_cast<Scalar>(quad_nodes);
}

ExtensionConsistencyReport extension_consistency(const ReferenceFunction& f,
                                                 const TubeNeighborhood& tube,
                                                 const LimitGraph& psi,
                                                 int sample_count) {
  ExtensionConsistencyReport rep;
  const Scalar rho_b = tube.collar_width();
  if (!(rho_b > 0))
    throw DomainError("extension_consistency: tube needs a collar");
  const Scalar rho = 1.0 - rho_b / 2;
  rep.rho = rho;
  const int m = tube.center().components();

  // Geometric convergence of the trapezoid rule slows like (|z|/rho)^n, so
  // points deep in the collar need proportionally more nodes.
  auto extend_at = [&](Complex z, const VectorXcd& w) {
    const Scalar ratio = std::abs(z) / rho;
    int n = 256;
    if (ratio > 0.8) {
      const Scalar need = 25.0 / std::max(1e-4, -std::log(ratio));
      n = static_cast<int>(std::min<Scalar>(
          1 << 16, std::max<Scalar>(256.0, 64.0 * std::ceil(need / 64.0))));
    }
    return cauchy_slice_extend(f, rho, z, w, n);
  };

  // (a) Collar sample: radii between 1 - rho_b and the integration circle.
  {
    Scalar worst = 0;
    for (int ri = 0; ri < 3; ++ri) {
      const Scalar rz = 1.0 - rho_b * (0.9 - 0.25 * ri);
      if (!(rz < rho)) continue;
      for (int k = 0; k < sample_count; ++k) {
        const Complex z =
            std::polar(rz, 2 * std::numbers::pi * k / sample_count);
        for (int wi = 0; wi < sample_count; ++wi) {
          VectorXcd w = VectorXcd::Zero(m);
          const Scalar t = -0.8 + 1.6 * wi / (sample_count - 1);
          for (int j = 0; j < m; ++j)
            w[j] = Complex(t, 0.1 * ((wi + j) % 3 - 1));
          const Complex ext = extend_at(z, w);
          worst = std::max(worst, std::abs(ext - f.f(z, w)));
        }
      }
    }
    rep.collar_max_dev = worst;
  }

  // (b) Along the translated limit graph, restricted to points inside the
  // tube (the overlap surrogate).
  {
    Scalar worst = 0;
    int checked = 0;
    for (int ri = 1; ri <= sample_count; ++ri) {
      const Scalar rz = 0.85 * ri / sample_count;
      for (int k = 0; k < sample_count; ++k) {
        const Complex z =
            std::polar(rz, 2 * std::numbers::pi * (k + 0.5) / sample_count);
        VectorXcd w(m);
        for (int j = 0; j < m; ++j) w[j] = psi.eval(z, j);
        if (!tube_contains(tube, z, w)) continue;
        const Complex ext = extend_at(z, w);
        worst = std::max(worst, std::abs(ext - f.f(z, w)));
        ++checked;
      }
    }
    rep.graph_max_dev = worst;
    rep.graph_points_checked = checked;
  }

  // (c) Against the global continuation on an interior sample, when the
  // reference carries one.
  if (f.extension) {
    Scalar worst = 0;
    for (int zi = 0; zi < sample_count; ++zi) {
      const Complex z = std::polar(
          0.7 * (zi + 1) / sample_count,
          2 * std::numbers::pi * zi / sample_count);
      for (int wi = 0; wi < sample_count; ++wi) {
        VectorXcd w = VectorXcd::Zero(m);
        for (int j = 0; j < m; ++j)
          w[j] = Complex(-0.8 + 1.6 * wi / (sample_count - 1), 0);
        const Complex ext = extend_at(z, w);
        const Complex oracle = f.extension(z, w);
        const Scalar scale = std::max(1.0, std::abs(oracle));
        worst = std::max(worst, std::abs(ext - oracle) / scale);
      }
    }
    rep.interior_oracle_dev = worst;
  } else {
    rep.interior_skipped = true;
  }

  rep.pass = rep.collar_max_dev < kTolExt && rep.graph_max_dev < kTolExt &&
             (!rep.interior_oracle_dev || *rep.interior_oracle_dev < kTolExt);
  return rep;
}

}  // namespace hartogs
