#include "magspec/cylinder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec {

MetricCylinder MetricCylinder::product(double a, double L) {
  MetricCylinder cyl;
  cyl.a = a;
  cyl.L_ref = L;
  cyl.theta = [](double, double) { return 1.0; };
  cyl.is_product = true;
  return cyl;
}

void MetricCylinder::validate(int n_r, int n_t) const {
  if (!(a > 0.0) || !(L_ref > 0.0) || !theta) {
    throw BadMetricProfile("cylinder needs a > 0, L_ref > 0 and a profile");
  }
  for (int i = 0; i < n_r; ++i) {
    const double r = a * i / (n_r - 1);
    for (int j = 0; j < n_t; ++j) {
      const double t = L_ref * j / (n_t - 1);
      if (!(theta(r, t) > 0.0)) {
        throw BadMetricProfile("theta must be positive on the cylinder");
      }
    }
    if (std::abs(theta(r, 0.0) - theta(r, L_ref)) > 1e-12 * std::max(1.0, theta(r, 0.0))) {
      throw BadMetricProfile("theta must be L_ref-periodic in t");
    }
  }
}

FoliationConstants cylinder_K(const MetricCylinder& cyl, int n_r, int n_t) {
  cyl.validate();
  FoliationConstants out;
  out.K = 1.0;
  out.K_bound = 1.0;
  out.sup_grad = 1.0;
  out.inf_grad = 1.0;
  double max_len = 0.0;
  for (int i = 0; i < n_r; ++i) {
    const double r = cyl.a * i / (n_r - 1);
    const double len = periodic_trapezoid(
        [&](double t) { return cyl.theta(r, t); }, 0.0, cyl.L_ref, n_t);
    max_len = std::max(max_len, len);
  }
  out.L = max_len;
  return out;
}

double diagonal_metric_K(const SurfaceFn& alpha, double a, double L_ref,
                         int n_r, int n_t) {
  double sup = 0.0;
  double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_r; ++i) {
    const double r = a * i / (n_r - 1);
    for (int j = 0; j < n_t; ++j) {
      const double t = L_ref * j / n_t;
      const double al = alpha(r, t);
      if (!(al > 0.0)) throw BadMetricProfile("alpha must be positive");
      const double g = 1.0 / al;
      sup = std::max(sup, g);
      inf = std::min(inf, g);
    }
  }
  return sup / inf;
}

}  // namespace magspec
