#pragma once

#include <complex>
#include <vector>

#include "magspec/one_form.hpp"
#include "magspec/quadrature.hpp"

namespace magspec {

struct CircleEigenvalue {
  double lambda;
  int k;
};

struct ProductEigenvalue {
  double lambda;
  int h;  // axial index, h >= 0
  int k;  // angular index
};

// Eigenvalues (2 pi / L)^2 (k - flux)^2 for k in [k_min, k_max], ascending.
std::vector<CircleEigenvalue> circle_eigenvalues(double L, double flux,
                                                 int k_min, int k_max);

// The `count` smallest eigenvalues pi^2 h^2 / a^2 + (2 pi / L)^2 (k - flux)^2.
std::vector<ProductEigenvalue> product_spectrum(double a, double L, double flux,
                                                int count);

// Unit-modulus eigenfunction on the metric circle (theta normalized so that
// its integral over [0,L] is L).
class CircleEigenfunction {
 public:
  CircleEigenfunction(Real1Fn theta, Real1Fn H, double L, int k);

  std::complex<double> operator()(double t) const;
  double lambda() const { return lambda_; }
  double flux() const { return flux_; }
  double arc_length(double t) const { return s_(t); }

 private:
  CumulativeIntegral s_;      // int_0^t theta
  CumulativeIntegral h_int_;  // int_0^t H
  double L_, flux_, lambda_;
  int k_;
};

CircleEigenfunction circle_eigenfunction(const Real1Fn& theta, const Real1Fn& H,
                                         double L, int k);

// Max pointwise defect of the k-th closed-form eigenfunction in the
// harmonic-gauge ODE, via second-order finite differences on n nodes.
double verify_circle_eigen(const Real1Fn& theta, const Real1Fn& H, double L,
                           int k, int n = 4096);

}  // namespace magspec
