#include "hartogs/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace hartogs {
namespace {

// Fritsch-Carlson slopes for one real channel.
ArrayXd fc_slopes(const ArrayXd& x, const ArrayXd& y) {
  const Eigen::Index n = x.size();
  ArrayXd m(n);
  if (n == 1) {
    m[0] = 0;
    return m;
  }
  ArrayXd h(n - 1), d(n - 1);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    d[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    m[0] = m[1] = d[0];
    return m;
  }
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    if (d[i - 1] == 0.0 || d[i] == 0.0 || (d[i - 1] > 0) != (d[i] > 0)) {
      m[i] = 0;
    } else {
      const Scalar w1 = 2 * h[i] + h[i - 1];
      const Scalar w2 = h[i] + 2 * h[i - 1];
      m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto endpoint = [](Scalar h0, Scalar h1, Scalar d0, Scalar d1) {
    Scalar s = ((2 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0)
      s = 0;
    else if (d0 * d1 < 0 && std::abs(s) > 3 * std::abs(d0))
      s = 3 * d0;
    return s;
  };
  m[0] = endpoint(h[0], h[1], d[0], d[1]);
  m[n - 1] = endpoint(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  return m;
}

}  // namespace

PchipInterpolant::PchipInterpolant(ArrayXd x, ArrayXcd y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 1)
    throw DomainError("pchip: node/value size mismatch");
  for (Eigen::Index i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i] < x_[i + 1])) throw DomainError("pchip: nodes not increasing");
  const ArrayXd mr = fc_slopes(x_, y_.real());
  const ArrayXd mi = fc_slopes(x_, y_.imag());
  slope_.resize(x_.size());
  slope_.real() = mr;
  slope_.imag() = mi;
}

Complex PchipInterpolant::eval(Scalar x, bool extend) const {
  const Eigen::Index n = x_.size();
  if (n == 1) return y_[0];
  Eigen::Index i;
  if (x <= x_[0]) {
    if (!extend && x < x_[0]) throw DomainError("pchip: point below range");
    i = 0;
  } else if (x >= x_[n - 1]) {
    if (!extend && x > x_[n - 1]) throw DomainError("pchip: point above range");
    i = n - 2;
  } else {
    i = std::upper_bound(x_.data(), x_.data() + n, x) - x_.data() - 1;
  }
  const Scalar h = x_[i + 1] - x_[i];
  const Scalar t = (x - x_[i]) / h;
  const Scalar t2 = t * t, t3 = t2 * t;
  const Scalar h00 = 2 * t3 - 3 * t2 + 1;
  const Scalar h10 = t3 - 2 * t2 + t;
  const Scalar h01 = -2 * t3 + 3 * t2;
  const Scalar h11 = t3 - t2;
  return h00 * y_[i] + h * h10 * slope_[i] + h01 * y_[i + 1] +
         h * h11 * slope_[i + 1];
}

ArrayXd fornberg_weights(Scalar x0, const ArrayXd& nodes, int m) {
  const int n = static_cast<int>(nodes.size());
  if (m >= n) throw DomainError("fornberg: order too high for node count");
  // B. Fornberg, Math. Comp. 51 (1988): recursive weight generation.
  Eigen::ArrayXXd c = Eigen::ArrayXXd::Zero(n, m + 1);
  Scalar c1 = 1;
  Scalar c4 = nodes[0] - x0;
  c(0, 0) = 1;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    Scalar c2 = 1;
    const Scalar c5 = c4;
    c4 = nodes[i] - x0;
    for (int j = 0; j < i; ++j) {
      const Scalar c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c(i, k) = c1 * (k * c(i - 1, k - 1) - c5 * c(i - 1, k)) / c2;
        c(i, 0) = -c1 * c5 * c(i - 1, 0) / c2;
      }
      for (int k = mn; k >= 1; --k)
        c(j, k) = (c4 * c(j, k) - k * c(j, k - 1)) / c3;
      c(j, 0) = c4 * c(j, 0) / c3;
    }
    c1 = c2;
  }
  return c.col(m);
}

std::array<Complex, kFlatOrder + 1> derivatives_at_zero(
    const std::function<Complex(Scalar)>& f, Scalar spacing) {
  constexpr int kNodes = kFlatOrder + 2;
  ArrayXd nodes(kNodes);
  ArrayXcd vals(kNodes);
  for (int i = 0; i < kNodes; ++i) {
    nodes[i] = i * spacing;
    vals[i] = f(nodes[i]);
  }
  std::array<Complex, kFlatOrder + 1> out{};
  for (int k = 0; k <= kFlatOrder; ++k) {
    const ArrayXd w = fornberg_weights(0.0, nodes, k);
    Complex acc = 0;
    for (int i = 0; i < kNodes; ++i) acc += w[i] * vals[i];
    out[k] = acc;
  }
  return out;
}

MinimizeResult golden_section_minimize(const std::function<Scalar(Scalar)>& f,
                                       Scalar a, Scalar b, Scalar tol) {
  const Scalar invphi = (std::sqrt(5.0) - 1) / 2;
  Scalar x1 = b - invphi * (b - a);
  Scalar x2 = a + invphi * (b - a);
  Scalar f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = f(x2);
    }
  }
  const Scalar xm = (a + b) / 2;
  return {xm, f(xm)};
}

MinimizeResult scan_minimize(const std::function<Scalar(Scalar)>& f, Scalar a,
                             Scalar b, int scan_points, Scalar tol) {
  if (scan_points < 3) throw DomainError("scan_minimize: need >= 3 points");
  int best = 0;
  Scalar fbest = f(a);
  for (int i = 1; i < scan_points; ++i) {
    const Scalar x = a + (b - a) * i / (scan_points - 1);
    const Scalar fx = f(x);
    if (fx < fbest) {
      fbest = fx;
      best = i;
    }
  }
  const Scalar step = (b - a) / (scan_points - 1);
  const Scalar lo = std::max(a, a + (best - 1) * step);
  const Scalar hi = std::min(b, a + (best + 1) * step);
  return golden_section_minimize(f, lo, hi, tol);
}

}  // namespace hartogs
