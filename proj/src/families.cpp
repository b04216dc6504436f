#include "hartogs/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hartogs/dft.hpp"

namespace hartogs {

const char* to_string(FamilyKind k) {
  return k == FamilyKind::annulus ? "annulus" : "disc";
}

namespace {

struct SliceCoeffs {
  std::vector<int> modes;
  std::vector<Complex> b;
};

// b_n(r) per tracked mode, with the eta translate folded into mode 0.
SliceCoeffs collect_coeffs(const SmoothApproximant& g, int j, Scalar r,
                           const VectorXcd& eta, bool nonneg_only) {
  SliceCoeffs sc;
  bool have_zero = false;
  for (const auto& f : g.forms()[j]) {
    if (nonneg_only && f.n < 0) continue;
    Complex b = f.value(r);
    if (f.n == 0) {
      b += eta[j];
      have_zero = true;
    }
    sc.modes.push_back(f.n);
    sc.b.push_back(b);
  }
  if (!have_zero && eta[j] != Complex(0, 0)) {
    sc.modes.push_back(0);
    sc.b.push_back(eta[j]);
  }
  return sc;
}

Complex coeffs_value(const SliceCoeffs& sc, Scalar r, Complex zeta) {
  Complex acc = 0;
  for (size_t i = 0; i < sc.modes.size(); ++i)
    acc += sc.b[i] * std::pow(zeta / r, sc.modes[i]);
  return acc;
}

FamilySlice build_slice(const SmoothApproximant& g, FamilyKind kind, Scalar r,
                        const VectorXcd& eta, int n_rho, int n_theta) {
  if (!(r > 0) || !(r < 1))
    throw DomainError("family slice: radius must lie in (0, 1)");
  if (eta.size() != g.series().components())
    throw DomainError("family slice: eta dimension mismatch");
  if (kind == FamilyKind::disc && g.mode_sign() != ModeSign::nonnegative_only)
    throw DomainError("disc_map: approximant must be nonnegative-only");
  if (!is_power_of_two(n_theta) ||
      n_theta < 4 * g.series().degree_bound() + 4)
    throw DomainError("family slice: angle count too small for the mode band");

  const int m = g.series().components();
  FamilySlice slice;
  slice.kind = kind;
  slice.r = r;
  slice.eta = eta;
  slice.thetas.resize(n_theta);
  for (int k = 0; k < n_theta; ++k)
    slice.thetas[k] = 2 * std::numbers::pi * k / n_theta;
  slice.rho.resize(n_rho);
  for (int i = 0; i < n_rho; ++i) {
    const Scalar t = static_cast<Scalar>(i) / (n_rho - 1);
    slice.rho[i] = kind == FamilyKind::annulus ? r + (1 - r) * t : r * t;
  }

  slice.values.assign(m, ArrayXXcd::Zero(n_rho, n_theta));
  ArrayXcd row(n_theta);
  for (int j = 0; j < m; ++j) {
    const SliceCoeffs sc =
        collect_coeffs(g, j, r, eta, kind == FamilyKind::disc);
    for (int i = 0; i < n_rho; ++i) {
      const Scalar rho = slice.rho[i];
      row.setZero();
      for (size_t t = 0; t < sc.modes.size(); ++t) {
        const int n = sc.modes[t];
        Scalar radial;
        if (n == 0)
          radial = 1.0;
        else if (rho == 0.0)
          radial = 0.0;  // disc centre: nonconstant powers vanish
        else
          radial = std::pow(rho / r, n);
        const Complex c = sc.b[t] * radial;
        if (c == Complex(0, 0)) continue;
        for (int k = 0; k < n_theta; ++k)
          row[k] += c * std::polar(1.0, n * slice.thetas[k]);
      }
      slice.values[j].row(i) = row.transpose();
    }
  }

  // Attachment along |zeta| = r against G^(eta), evaluated independently
  // through the series view.
  const int att_row = kind == FamilyKind::annulus ? 0 : n_rho - 1;
  Scalar att = 0;
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n_theta; ++k) {
      const Complex gv = evaluate(g.series(), r, slice.thetas[k], j) + eta[j];
      att = std::max(att, std::abs(slice.values[j](att_row, k) - gv));
    }
  slice.inner_attachment = att;

  if (kind == FamilyKind::annulus) {
    Scalar outer = 0;
    for (int j = 0; j < m; ++j)
      outer = std::max(outer, slice.values[j].row(n_rho - 1).abs().maxCoeff());
    slice.outer_boundary_modulus = outer;
  }
  return slice;
}

}  // namespace

FamilySlice annulus_map(const SmoothApproximant& g, Scalar r,
                        const VectorXcd& eta, int n_rho, int n_theta) {
  FamilySlice slice =
      build_slice(g, FamilyKind::annulus, r, eta, n_rho, n_theta);
  if (slice.outer_boundary_modulus >= 1.0)
    throw CertificateError("annulus_map: outer boundary modulus >= 1 at r = " +
                           std::to_string(r));
  return slice;
}

FamilySlice disc_map(const SmoothApproximant& g, Scalar r, const VectorXcd& eta,
                     int n_rho, int n_theta) {
  return build_slice(g, FamilyKind::disc, r, eta, n_rho, n_theta);
}

Complex LimitGraph::eval(Complex zeta, int j) const {
  Complex acc = 0;
  for (const auto& [n, c] : coeffs.at(j)) acc += c * std::pow(zeta, n);
  return acc;
}

LimitGraph limit_graph(const SmoothApproximant& g, FamilyKind kind,
                       const VectorXcd& eta, bool cross_check) {
  const int m = g.series().components();
  if (eta.size() != m) throw DomainError("limit_graph: eta dimension mismatch");
  if (kind == FamilyKind::disc && g.mode_sign() != ModeSign::nonnegative_only)
    throw DomainError("limit_graph: disc kind needs a nonnegative-only input");

  LimitGraph lg;
  lg.kind = kind;
  lg.eta = eta;
  lg.coeffs.resize(m);

  for (int j = 0; j < m; ++j) {
    if (kind == FamilyKind::disc) {
      for (const auto& f : g.forms()[j])
        if (f.n >= 0) lg.coeffs[j][f.n] = f.value(1.0);
    } else {
      for (const auto& f : g.forms()[j]) {
        if (f.n < 0) continue;  // negative modes vanish in the limit
        if (f.n == 0) {
          lg.coeffs[j][0] = f.value(0.0);
        } else if (f.n <= kFlatOrder) {
          Scalar factorial = 1;
          for (int k = 2; k <= f.n; ++k) factorial *= k;
          lg.coeffs[j][f.n] = f.derivs0[f.n] / factorial;
        } else if (f.ratio) {
          const Scalar probe = g.ledger().r0 > 0 ? g.ledger().r0 / 4 : 1e-7;
          lg.coeffs[j][f.n] = f.ratio(probe);
        }
      }
    }
    auto it = lg.coeffs[j].find(0);
    if (it != lg.coeffs[j].end())
      it->second += eta[j];
    else if (eta[j] != Complex(0, 0))
      lg.coeffs[j][0] = eta[j];
  }

  const bool closed = g.series().has_closed_forms();
  constexpr int kProbes = 12;
  std::vector<Complex> zeta_probes;
  for (int t = 0; t < kProbes; ++t)
    zeta_probes.push_back(std::polar(0.55 + 0.03 * (t % 3),
                                     2 * std::numbers::pi * t / kProbes));

  auto family_value = [&](Scalar r, Complex zeta, int j) {
    const SliceCoeffs sc =
        collect_coeffs(g, j, r, eta, kind == FamilyKind::disc);
    return coeffs_value(sc, r, zeta);
  };

  constexpr int kLevels = 6;
  const Scalar r_start =
      kind == FamilyKind::annulus
          ? (closed ? std::min(0.04, std::max(g.ledger().r0 / 2, 1e-8)) : 0.08)
          : 0.9;
  for (int k = 0; k < kLevels; ++k) {
    const Scalar r = kind == FamilyKind::annulus
                         ? r_start / (1 << k)
                         : 1.0 - (1.0 - r_start) / (1 << k);
    Scalar dev = 0;
    for (int j = 0; j < m; ++j)
      for (const Complex& z : zeta_probes)
        dev = std::max(dev, std::abs(family_value(r, z, j) - lg.eval(z, j)));
    lg.convergence.emplace_back(r, dev);
  }

  if (cross_check && kind == FamilyKind::annulus && closed) {
    // Richardson extrapolation of the family values along r_k = r0 2^{-k}.
    Scalar worst = 0;
    for (int j = 0; j < m; ++j)
      for (const Complex& z : zeta_probes) {
        std::array<Complex, kLevels> t;
        for (int k = 0; k < kLevels; ++k)
          t[k] = family_value(r_start / (1 << k), z, j);
        for (int level = 1; level < kLevels; ++level) {
          const Scalar f = std::pow(2.0, level);
          for (int k = kLevels - 1; k >= level; --k)
            t[k] = t[k] + (t[k] - t[k - 1]) / (f - 1);
        }
        worst = std::max(worst, std::abs(t[kLevels - 1] - lg.eval(z, j)));
      }
    if (worst > kTolPsi)
      throw ConsistencyError(
          "limit_graph: coefficient formula and extrapolation disagree (" +
          std::to_string(worst) + ")");
    lg.extrapolation_checked = true;
  }
  return lg;
}

ArrayXd default_r_schedule(FamilyKind kind, Scalar r_min, int slices) {
  ArrayXd out(slices);
  if (kind == FamilyKind::annulus) {
    const Scalar hi = 0.95, lo = r_min;
    for (int i = 0; i < slices; ++i)
      out[i] = hi * std::pow(lo / hi, static_cast<Scalar>(i) / (slices - 1));
  } else {
    const Scalar lo = 0.05, hi = 0.95;
    for (int i = 0; i < slices; ++i)
      out[i] = lo * std::pow(hi / lo, static_cast<Scalar>(i) / (slices - 1));
  }
  return out;
}

std::vector<VectorXcd> default_eta_grid(int components, Scalar radius,
                                        int per_axis) {
  std::vector<Complex> axis;
  for (int a = 0; a < per_axis; ++a)
    for (int b = 0; b < per_axis; ++b) {
      const Scalar re =
          per_axis == 1 ? 0 : radius * (2.0 * a / (per_axis - 1) - 1);
      const Scalar im =
          per_axis == 1 ? 0 : radius * (2.0 * b / (per_axis - 1) - 1);
      axis.emplace_back(re, im);
    }
  std::vector<VectorXcd> grid;
  std::vector<int> idx(components, 0);
  while (true) {
    VectorXcd eta(components);
    for (int j = 0; j < components; ++j) eta[j] = axis[idx[j]];
    grid.push_back(eta);
    int j = 0;
    for (; j < components; ++j) {
      if (++idx[j] < static_cast<int>(axis.size())) break;
      idx[j] = 0;
    }
    if (j == components) break;
  }
  return grid;
}

KontinuitaetssatzCertificate certify_family(
    const SmoothApproximant& g, const TubeNeighborhood& tube, FamilyKind kind,
    const std::vector<VectorXcd>& eta_grid, const ArrayXd& r_schedule,
    int n_rho, int n_theta) {
  if (eta_grid.empty() || r_schedule.size() == 0)
    throw DomainError("certify_family: empty schedule");
  KontinuitaetssatzCertificate cert;
  cert.delta0 = tube.delta0();
  cert.kset_inner_radius = std::numeric_limits<Scalar>::infinity();

  const int m = g.series().components();
  Scalar eta_max = 0;
  for (const auto& eta : eta_grid)
    for (int j = 0; j < m; ++j) eta_max = std::max(eta_max, std::abs(eta[j]));
  cert.eta_within_pre =
      tube.graph_radius() > g.ledger().achieved_closeness + eta_max;

  {
    Scalar s = 0;
    const PolarGrid& grid = g.series().grid();
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < grid.n_radii(); ++i)
        for (int k = 0; k < grid.n_theta(); k += 4)
          s = std::max(s, std::abs(evaluate(g.series(), grid.radii()[i],
                                            grid.theta(k), j)));
    cert.kset_allowed_bound = std::max(s + eta_max, 1.0);
  }

  struct SliceStats {
    Scalar boundary = -std::numeric_limits<Scalar>::infinity();
    Scalar attachment = 0;
    Scalar outer_modulus = 0;
    Scalar holomorphy = 0;
    bool fully_inside = true;
    Scalar kset_bound = 0;
    Scalar kset_inner = std::numeric_limits<Scalar>::infinity();
    long kset_count = 0;
  };

  const int n_eta = static_cast<int>(eta_grid.size());
  const int n_r = static_cast<int>(r_schedule.size());
  std::vector<SliceStats> stats(n_eta * n_r);

  parallel_for(0, n_eta * n_r, [&](int idx) {
    const VectorXcd& eta = eta_grid[idx / n_r];
    const Scalar r = r_schedule[idx % n_r];
    const FamilySlice slice = build_slice(g, kind, r, eta, n_rho, n_theta);
    SliceStats st;
    st.attachment = slice.inner_attachment;
    st.outer_modulus = slice.outer_boundary_modulus;

    VectorXcd w(m);
    const int last = static_cast<int>(slice.rho.size()) - 1;
    for (int i = 0; i <= last; ++i) {
      const bool inner_boundary =
          kind == FamilyKind::annulus ? i == 0 : i == last;
      const bool outer_boundary = kind == FamilyKind::annulus && i == last;
      for (int k = 0; k < n_theta; ++k) {
        const Complex zeta = std::polar(slice.rho[i], slice.thetas[k]);
        for (int j = 0; j < m; ++j) w[j] = slice.values[j](i, k);
        if (inner_boundary)
          st.boundary = std::max(st.boundary, tube.graph_signed(zeta, w));
        else if (outer_boundary)
          st.boundary = std::max(st.boundary, tube.collar_signed(zeta, w));
        if (tube.signed_distance(zeta, w) >= 0) {
          st.fully_inside = false;
          Scalar norm = std::abs(zeta);
          for (int j = 0; j < m; ++j) norm = std::max(norm, std::abs(w[j]));
          st.kset_bound = std::max(st.kset_bound, norm);
          st.kset_inner = std::min(st.kset_inner, std::abs(zeta));
          ++st.kset_count;
        }
      }
    }

    // Laurent fingerprint on the interior rings: the angular spectrum of a
    // graph value ring must sit exactly on the tracked modes with moduli
    // |b_n(r)| (rho/r)^n.
    for (int i = 1; i < last; ++i) {
      const Scalar rho = slice.rho[i];
      if (rho <= 0) continue;
      for (int j = 0; j < m; ++j) {
        const ArrayXcd ring = slice.values[j].row(i).transpose();
        const ArrayXcd spec = angular_spectrum(ring);
        const SliceCoeffs sc =
            collect_coeffs(g, j, r, eta, kind == FamilyKind::disc);
        ArrayXd expected = ArrayXd::Zero(n_theta);
        for (size_t t = 0; t < sc.modes.size(); ++t) {
          const int n = sc.modes[t];
          const int bin = ((n % n_theta) + n_theta) % n_theta;
          expected[bin] +=
              std::abs(sc.b[t] * (n == 0 ? 1.0 : std::pow(rho / r, n)));
        }
        for (int bin = 0; bin < n_theta; ++bin)
          st.holomorphy = std::max(
              st.holomorphy, std::abs(std::abs(spec[bin]) - expected[bin]));
      }
    }
    stats[idx] = st;
  });

  // Consecutive-slice continuity on shared probe rings.
  Scalar continuity = 0;
  for (int e = 0; e < n_eta; ++e) {
    for (int i = 0; i + 1 < n_r; ++i) {
      const Scalar r1 = r_schedule[i], r2 = r_schedule[i + 1];
      const Scalar base =
          kind == FamilyKind::annulus ? std::max(r1, r2) : std::min(r1, r2);
      for (int j = 0; j < m; ++j) {
        const SliceCoeffs sc1 =
            collect_coeffs(g, j, r1, eta_grid[e], kind == FamilyKind::disc);
        const SliceCoeffs sc2 =
            collect_coeffs(g, j, r2, eta_grid[e], kind == FamilyKind::disc);
        for (Scalar t : {0.25, 0.5, 0.75}) {
          const Scalar rho =
              kind == FamilyKind::annulus ? base + (1 - base) * t : base * t;
          for (int k = 0; k < 32; ++k) {
            const Complex z = std::polar(rho, 2 * std::numbers::pi * k / 32);
            continuity = std::max(continuity,
                                  std::abs(coeffs_value(sc1, r1, z) -
                                           coeffs_value(sc2, r2, z)));
          }
        }
      }
    }
  }
  cert.continuity_modulus = continuity;

  // Accumulation-set proxy: family points outside the tube (collected
  // above) plus sampled limit-graph points outside the tube.
  for (int e = 0; e < n_eta; ++e) {
    const LimitGraph psi = limit_graph(g, kind, eta_grid[e], false);
    VectorXcd w(m);
    for (int ri = 1; ri <= 8; ++ri)
      for (int k = 0; k < 64; ++k) {
        const Complex z =
            std::polar(0.95 * ri / 8, 2 * std::numbers::pi * k / 64);
        for (int j = 0; j < m; ++j) w[j] = psi.eval(z, j);
        if (tube.signed_distance(z, w) >= 0) {
          Scalar norm = std::abs(z);
          for (int j = 0; j < m; ++j) norm = std::max(norm, std::abs(w[j]));
          cert.kset_bound = std::max(cert.kset_bound, norm);
          cert.kset_inner_radius =
              std::min(cert.kset_inner_radius, std::abs(z));
          ++cert.kset_count;
        }
      }
  }

  Scalar worst_boundary = -std::numeric_limits<Scalar>::infinity();
  bool first_inside = true;
  bool any_inside = false;
  Scalar most_extreme_inside = 0;
  for (int idx = 0; idx < n_eta * n_r; ++idx) {
    const SliceStats& st = stats[idx];
    worst_boundary = std::max(worst_boundary, st.boundary);
    cert.worst_inner_attachment =
        std::max(cert.worst_inner_attachment, st.attachment);
    cert.worst_outer_modulus =
        std::max(cert.worst_outer_modulus, st.outer_modulus);
    cert.holomorphy_residual =
        std::max(cert.holomorphy_residual, st.holomorphy);
    cert.kset_bound = std::max(cert.kset_bound, st.kset_bound);
    cert.kset_inner_radius = std::min(cert.kset_inner_radius, st.kset_inner);
    cert.kset_count += st.kset_count;
    if (idx % n_r == 0 && !st.fully_inside) first_inside = false;
    if (st.fully_inside) {
      const Scalar r = r_schedule[idx % n_r];
      most_extreme_inside = !any_inside
                                ? r
                                : (kind == FamilyKind::annulus
                                       ? std::max(most_extreme_inside, r)
                                       : std::min(most_extreme_inside, r));
      any_inside = true;
    }
  }
  cert.boundary_containment = worst_boundary;
  cert.initial_containment = any_inside ? most_extreme_inside : 0;
  cert.slices_evaluated = n_eta * n_r;

  if (!(cert.boundary_containment < 0))
    cert.first_violation = "boundary_containment";
  else if (!(cert.kset_bound <= cert.kset_allowed_bound))
    cert.first_violation = "kset_bound";
  else if (!(cert.kset_inner_radius >= cert.delta0))
    cert.first_violation = "kset_inner_radius";
  else if (!first_inside)
    cert.first_violation = "initial_containment";
  cert.pass = cert.first_violation.empty();
  return cert;
}

}  // namespace hartogs
