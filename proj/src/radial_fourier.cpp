#include "hartogs/radial_fourier.hpp"

#include <cmath>
#include <numbers>

namespace hartogs {

RadialModeSeries modes_from_samples(const DiscSample& sample, int max_mode) {
  const PolarGrid& grid = sample.grid();
  const int nt = grid.n_theta();
  if (max_mode > nt / 2 - 1)
    throw AliasingError("modes_from_samples: max_mode exceeds Nyquist band");
  const int nr = grid.n_radii();
  const int m = sample.components();

  std::vector<RadialModeSeries::ModeMap> modes(m);
  for (int j = 0; j < m; ++j) {
    const ArrayXXcd& table = sample.values(j);
    std::vector<ArrayXcd> coeff(2 * max_mode + 1, ArrayXcd::Zero(nr));
    parallel_for(0, nr, [&](int i) {
      for (int n = -max_mode; n <= max_mode; ++n) {
        Complex acc = 0;
        for (int k = 0; k < nt; ++k)
          acc += table(i, k) * std::polar(1.0, -n * grid.theta(k));
        coeff[n + max_mode][i] = acc / static_cast<Scalar>(nt);
      }
    });
    for (int n = -max_mode; n <= max_mode; ++n) {
      const ArrayXcd& c = coeff[n + max_mode];
      Complex at0(0, 0);
      if (n == 0) {
        // Quadratic extrapolation to r = 0 through the three smallest radii.
        const Scalar x0 = grid.radii()[0], x1 = grid.radii()[1],
                     x2 = grid.radii()[2];
        at0 = c[0] * (x1 * x2) / ((x0 - x1) * (x0 - x2)) +
              c[1] * (x0 * x2) / ((x1 - x0) * (x1 - x2)) +
              c[2] * (x0 * x1) / ((x2 - x0) * (x2 - x1));
      }
      modes[j].emplace(n, RadialProfile(grid.radii(), c, at0));
    }
  }
  return RadialModeSeries(grid, std::move(modes));
}

DiscSample samples_from_modes(const RadialModeSeries& series,
                              const PolarGrid& grid) {
  const int nr = grid.n_radii();
  const int nt = grid.n_theta();
  std::vector<ArrayXXcd> values(series.components(), ArrayXXcd::Zero(nr, nt));
  for (int j = 0; j < series.components(); ++j) {
    ArrayXXcd& table = values[j];
    parallel_for(0, nr, [&](int i) {
      for (int k = 0; k < nt; ++k)
        table(i, k) = evaluate(series, grid.radii()[i], grid.theta(k), j);
    });
  }
  return DiscSample(grid, std::move(values));
}

namespace {

// Residual weight of mode n under the degree-N Cesaro mean.
Scalar residual_weight(int n, int N) {
  const int a = std::abs(n);
  return a > N ? 1.0 : static_cast<Scalar>(a) / (N + 1);
}

// Precomputed tracked modes of one component: per-radius coefficients and
// the angular phase row e^{i n theta_k}.
struct ModeRow {
  int n;
  ArrayXcd coeff;   // over radii
  Complex at_zero;
  ArrayXcd phase;   // over angles
};

std::vector<std::vector<ModeRow>> collect_rows(const RadialModeSeries& series) {
  const PolarGrid& grid = series.grid();
  std::vector<std::vector<ModeRow>> rows(series.components());
  for (int j = 0; j < series.components(); ++j) {
    for (const auto& [n, profile] : series.modes(j)) {
      ModeRow row;
      row.n = n;
      row.coeff = profile.samples();
      row.at_zero = profile.at_zero();
      row.phase.resize(grid.n_theta());
      for (int k = 0; k < grid.n_theta(); ++k)
        row.phase[k] = std::polar(1.0, n * grid.theta(k));
      rows[j].push_back(std::move(row));
    }
  }
  return rows;
}

Scalar sup_error_from_rows(const std::vector<std::vector<ModeRow>>& rows,
                           int n_radii, int n_theta, int N) {
  Scalar worst = 0;
  for (const auto& comp : rows) {
    std::vector<Scalar> per_radius(n_radii, 0.0);
    parallel_for(0, n_radii, [&](int i) {
      ArrayXcd acc = ArrayXcd::Zero(n_theta);
      for (const auto& row : comp) {
        const Scalar w = residual_weight(row.n, N);
        if (w != 0.0) acc += (w * row.coeff[i]) * row.phase;
      }
      per_radius[i] = acc.abs().maxCoeff();
    });
    for (Scalar v : per_radius) worst = std::max(worst, v);
    Scalar at0 = 0;
    for (const auto& row : comp)
      at0 += residual_weight(row.n, N) * std::abs(row.at_zero);
    worst = std::max(worst, at0);
  }
  return worst;
}

}  // namespace

Scalar fejer_sup_error(const RadialModeSeries& series, int N) {
  const auto rows = collect_rows(series);
  return sup_error_from_rows(rows, series.grid().n_radii(),
                             series.grid().n_theta(), N);
}

FejerResult fejer_uniform_degree(const RadialModeSeries& series,
                                 Scalar target) {
  if (!(target > 0)) throw DomainError("fejer: target must be > 0");
  const PolarGrid& grid = series.grid();
  const int n_cap = grid.n_theta() / 2 - 1;
  const auto rows = collect_rows(series);
  auto err = [&](int N) {
    return sup_error_from_rows(rows, grid.n_radii(), grid.n_theta(), N);
  };

  int N = 0;
  if (!(err(0) < target)) {
    int lo = 0, hi = 1;
    while (!(err(hi) < target)) {
      lo = hi;
      hi *= 2;
      if (lo > n_cap)
        throw ResolutionError(
            "fejer: degree exceeds the angular grid band; refine the grid");
    }
    while (hi - lo > 1) {
      const int mid = (lo + hi) / 2;
      if (err(mid) < target)
        hi = mid;
      else
        lo = mid;
    }
    if (hi > n_cap)
      throw ResolutionError(
          "fejer: degree exceeds the angular grid band; refine the grid");
    N = hi;
  }

  std::vector<RadialModeSeries::ModeMap> damped(series.components());
  for (int j = 0; j < series.components(); ++j) {
    for (const auto& [n, profile] : series.modes(j)) {
      if (std::abs(n) > N) continue;
      const Scalar w = 1.0 - static_cast<Scalar>(std::abs(n)) / (N + 1);
      if (profile.has_closed_form()) {
        auto fn = profile.closed_form();
        damped[j].emplace(
            n, RadialProfile(grid.radii(),
                             [fn, w](Scalar r) { return w * fn(r); }));
      } else {
        damped[j].emplace(n, RadialProfile(grid.radii(), w * profile.samples(),
                                           w * profile.at_zero()));
      }
    }
  }
  return FejerResult{N, RadialModeSeries(grid, std::move(damped)), err(N),
                     target};
}

}  // namespace hartogs
