#pragma once

#include <optional>

#include "hartogs/families.hpp"
#include "hartogs/tube.hpp"

namespace hartogs {

// Test oracle for the extension step: an evaluator on C x C^m together with
// (when one exists globally) its closed-form continuation to the closed
// polydisc.
struct ReferenceFunction {
  std::string name;
  std::function<Complex(Complex, const VectorXcd&)> f;
  std::function<Complex(Complex, const VectorXcd&)> extension;  // may be null
  std::string singularity;
};

// Rational references with closed-form continuations, holomorphic on a
// neighbourhood of the closed bidisc.
const std::vector<ReferenceFunction>& builtin_references();
const ReferenceFunction* find_reference(const std::string& name);

// Cauchy integral over |zeta| = rho by trapezoid quadrature:
//   (2 pi i)^{-1} \oint f(zeta, w) / (zeta - z) dzeta.
// Requires |z| < rho and quad_nodes >= 64.
Complex cauchy_slice_extend(const ReferenceFunction& f, Scalar rho, Complex z,
                            const VectorXcd& w, int quad_nodes = 256);

struct ExtensionConsistencyReport {
  Scalar rho = 0;
  Scalar collar_max_dev = 0;            // f-tilde vs f on the collar sample
  Scalar graph_max_dev = 0;             // along the limit graph, inside the tube
  std::optional<Scalar> interior_oracle_dev;  // vs the global continuation
  bool interior_skipped = false;        // no global oracle available
  int graph_points_checked = 0;
  bool pass = false;
};

// Checks the reconstructed values against f on a collar sample and along
// sampled points of the translated limit graph inside the tube; when the
// reference carries a global continuation, also against that continuation
// on an interior sample.
ExtensionConsistencyReport extension_consistency(const ReferenceFunction& f,
                                                 const TubeNeighborhood& tube,
                                                 const LimitGraph& psi,
                                                 int sample_count = 10);

}  // namespace hartogs
