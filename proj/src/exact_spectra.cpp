#include "magspec/exact_spectra.hpp"

#include <algorithm>
#include <cmath>

#include "magspec/errors.hpp"

namespace magspec {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

std::vector<CircleEigenvalue> circle_eigenvalues(double L, double flux,
                                                 int k_min, int k_max) {
  if (!(L > 0.0)) throw BadMetricProfile("circle length must be positive");
  std::vector<CircleEigenvalue> out;
  const double c = kTwoPi / L;
  for (int k = k_min; k <= k_max; ++k) {
    const double d = k - flux;
    out.push_back({c * c * d * d, k});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CircleEigenvalue& a, const CircleEigenvalue& b) {
                     return a.lambda < b.lambda;
                   });
  return out;
}

std::vector<ProductEigenvalue> product_spectrum(double a, double L, double flux,
                                                int count) {
  if (!(a > 0.0) || !(L > 0.0)) {
    throw BadMetricProfile("product cylinder needs a > 0 and L > 0");
  }
  if (count < 1) return {};

  // Enumerate a window generously larger than needed, then cut.
  std::vector<ProductEigenvalue> all;
  const double axial = kPi * kPi / (a * a);
  const double ang = kTwoPi * kTwoPi / (L * L);
  // Upper bound on the count-th value: count axial-only modes suffice.
  const double cap = axial * static_cast<double>(count) * static_cast<double>(count) +
                     ang * (std::abs(flux) + 1.0) * (std::abs(flux) + 1.0);
  for (int h = 0; axial * h * h <= cap; ++h) {
    const int k_center = static_cast<int>(std::lround(flux));
    for (int k = k_center;; ++k) {
      const double lam = axial * h * h + ang * (k - flux) * (k - flux);
      if (lam > cap && k > k_center) break;
      all.push_back({lam, h, k});
    }
    for (int k = k_center - 1;; --k) {
      const double lam = axial * h * h + ang * (k - flux) * (k - flux);
      if (lam > cap) break;
      all.push_back({lam, h, k});
    }
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ProductEigenvalue& x, const ProductEigenvalue& y) {
                     if (x.lambda != y.lambda) return x.lambda < y.lambda;
                     if (x.h != y.h) return x.h < y.h;
                     return x.k < y.k;
                   });
  if (static_cast<int>(all.size()) > count) all.resize(count);
  return all;
}

CircleEigenfunction::CircleEigenfunction(Real1Fn theta, Real1Fn H, double L,
                                         int k)
    : s_(theta, 0.0, L, 8192), h_int_(H, 0.0, L, 8192), L_(L), k_(k) {
  if (!(L > 0.0)) throw BadMetricProfile("circle length must be positive");
  if (std::abs(s_.total() - L) > 1e-8 * L) {
    throw BadMetricProfile("metric profile must integrate to L");
  }
  flux_ = h_int_.total() / kTwoPi;
  const double d = k_ - flux_;
  lambda_ = kTwoPi * kTwoPi / (L_ * L_) * d * d;
}

std::complex<double> CircleEigenfunction::operator()(double t) const {
  const double phase = h_int_(t) + kTwoPi * (k_ - flux_) * s_(t) / L_;
  return std::polar(1.0, phase);
}

CircleEigenfunction circle_eigenfunction(const Real1Fn& theta, const Real1Fn& H,
                                         double L, int k) {
  return CircleEigenfunction(theta, H, L, k);
}

double verify_circle_eigen(const Real1Fn& theta, const Real1Fn& H, double L,
                           int k, int n) {
  const CircleEigenfunction u(theta, H, L, k);
  const CircleGauge cg = coulomb_gauge_circle(H, theta, L);
  const double c = cg.c;
  const double lambda = u.lambda();

  // In the harmonic gauge the eigenfunction is w = e^{i gauge} u; plug it into
  // -w'' + (theta'/theta) w' + 2 i c theta w' + c^2 theta^2 w = lambda theta^2 w.
  const double h = L / n;
  std::vector<std::complex<double>> w(n);
  std::vector<double> th(n);
  for (int j = 0; j < n; ++j) {
    const double t = j * h;
    w[j] = std::polar(1.0, cg.gauge(t)) * u(t);
    th[j] = theta(t);
  }
  double worst = 0.0;
  const std::complex<double> iu(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    const int jm = (j + n - 1) % n;
    const int jp = (j + 1) % n;
    const std::complex<double> d1 = (w[jp] - w[jm]) / (2.0 * h);
    const std::complex<double> d2 = (w[jp] - 2.0 * w[j] + w[jm]) / (h * h);
    const double dth = (th[jp] - th[jm]) / (2.0 * h);
    const std::complex<double> res = -d2 + (dth / th[j]) * d1 +
                                     2.0 * iu * c * th[j] * d1 +
                                     (c * c - lambda) * th[j] * th[j] * w[j];
    worst = std::max(worst, std::abs(res));
  }
  return worst;
}

}  // namespace magspec
