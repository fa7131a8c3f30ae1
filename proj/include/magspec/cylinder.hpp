#pragma once

#include <functional>

#include "magspec/annulus.hpp"  // FoliationConstants

namespace magspec {

using SurfaceFn = std::function<double(double, double)>;

// Cylinder [0,a] x S^1 in normal form: metric dr^2 + theta(r,t)^2 dt^2 with
// t in [0, L_ref) periodic and theta > 0.
struct MetricCylinder {
  double a = 1.0;
  double L_ref = 6.283185307179586;
  SurfaceFn theta;
  bool is_product = false;

  static MetricCylinder product(double a, double L);

  // Samples positivity and t-periodicity of theta.
  void validate(int n_r = 33, int n_t = 129) const;
};

// Foliation constants for psi = r: the normal form has |grad psi| = 1, so
// K = 1 and L is the largest level-circle length max_r int theta(r,.) dt.
FoliationConstants cylinder_K(const MetricCylinder& cyl, int n_r = 257,
                              int n_t = 2048);

// Foliation ratio for a general diagonal metric alpha^2 dr^2 + theta^2 dt^2
// with psi = r: sup(1/alpha) / inf(1/alpha) over the sampled grid.
double diagonal_metric_K(const SurfaceFn& alpha, double a, double L_ref,
                         int n_r = 257, int n_t = 257);

}  // namespace magspec
