#pragma once

#include <map>

#include "hartogs/approximant.hpp"
#include "hartogs/tube.hpp"

namespace hartogs {

enum class FamilyKind { annulus, disc };

const char* to_string(FamilyKind k);

// One sampled member of the analytic family: the graph over the annulus
// r < |zeta| < 1 (or the disc |zeta| < r) of
//   sum_n b_n(r) (zeta/r)^n,   b_0 = B_0 + eta_j,
// together with its attachment diagnostics.
struct FamilySlice {
  FamilyKind kind = FamilyKind::annulus;
  Scalar r = 0;
  VectorXcd eta;
  ArrayXd rho;                     // sampled ring radii, boundary included
  ArrayXd thetas;
  std::vector<ArrayXXcd> values;   // per component, (n_rho x n_theta)
  Scalar inner_attachment = 0;     // sup deviation from G^(eta) on |zeta| = r
  Scalar outer_boundary_modulus = 0;  // annulus only, max_j sup on |zeta| = 1
};

// Throws CertificateError when the outer boundary modulus reaches 1 (the
// slice then cannot attach to the boundary cylinder).
FamilySlice annulus_map(const SmoothApproximant& g, Scalar r,
                        const VectorXcd& eta, int n_rho = 6, int n_theta = 128);

// Requires a nonnegative-only approximant.
FamilySlice disc_map(const SmoothApproximant& g, Scalar r, const VectorXcd& eta,
                     int n_rho = 6, int n_theta = 128);

// The holomorphic limit of the family: psi(zeta) = sum_n c_n zeta^n with
// c_n = (1/n!) d^n b_n/dr^n |_0 (annulus, r -> 0) or c_n = b_n(1) (disc,
// r -> 1). The eta translate is folded into c_0.
struct LimitGraph {
  FamilyKind kind = FamilyKind::annulus;
  VectorXcd eta;
  std::vector<std::map<int, Complex>> coeffs;  // per component
  std::vector<std::pair<Scalar, Scalar>> convergence;  // (r, sup deviation)
  bool extrapolation_checked = false;

  Complex eval(Complex zeta, int j) const;
};

// For approximants with closed-form profiles the coefficient formula is
// cross-checked against Richardson extrapolation of the family values;
// disagreement beyond kTolPsi raises ConsistencyError. Sample-backed
// approximants use the stored derivative estimates only.
LimitGraph limit_graph(const SmoothApproximant& g, FamilyKind kind,
                       const VectorXcd& eta, bool cross_check = true);

struct KontinuitaetssatzCertificate {
  bool pass = false;
  std::string first_violation;     // empty when pass
  Scalar boundary_containment = 0; // worst signed distance, pass requires < 0
  Scalar initial_containment = 0;  // most extreme schedule radius fully inside
  Scalar continuity_modulus = 0;   // max consecutive-slice deviation
  Scalar kset_bound = 0;           // sup norm over the accumulation proxy
  Scalar kset_inner_radius = 0;    // min |zeta| over the proxy (inf if empty)
  long kset_count = 0;
  Scalar kset_allowed_bound = 0;   // max(sup|G| + |eta|, 1)
  Scalar delta0 = 0;
  Scalar worst_inner_attachment = 0;
  Scalar worst_outer_modulus = 0;  // annulus only
  Scalar holomorphy_residual = 0;  // Laurent fingerprint worst residual
  int slices_evaluated = 0;
  bool eta_within_pre = true;      // graph radius exceeds |F-G| + max|eta|
};

// Scans the family over r_schedule x eta_grid against the tube. Failure is
// a certificate state naming the first violated field; nothing throws.
KontinuitaetssatzCertificate certify_family(
    const SmoothApproximant& g, const TubeNeighborhood& tube, FamilyKind kind,
    const std::vector<VectorXcd>& eta_grid, const ArrayXd& r_schedule,
    int n_rho = 6, int n_theta = 128);

// Geometric schedule: 40 slices from 0.95 down to r_min (annulus) or up
// from 0.05 to 0.95 (disc).
ArrayXd default_r_schedule(FamilyKind kind, Scalar r_min, int slices = 40);

// per_axis x per_axis translates per component on the closed polydisc of the
// given radius (tensored across components).
std::vector<VectorXcd> default_eta_grid(int components, Scalar radius,
                                        int per_axis = 5);

}  // namespace hartogs
