#pragma once

#include <functional>
#include <optional>

#include "magspec/vec2.hpp"

namespace magspec {

using SurfaceFn2 = std::function<double(double, double)>;
using Real1Fn = std::function<double(double)>;

// Smooth real gauge function phi with analytic partial derivatives; A is
// replaced by A + d(phi).
struct GaugeFunction {
  SurfaceFn2 phi;
  SurfaceFn2 dphi_dr;
  SurfaceFn2 dphi_dt;
};

// Closed 1-form A = f dr + h dt in cylinder coordinates (or f dx + h dy in
// planar ones). An optional exact-gradient part is tracked separately so that
// discretizations can integrate it along edges as an exact difference.
class OneForm {
 public:
  OneForm() = default;

  static OneForm from_components(SurfaceFn2 f, SurfaceFn2 h,
                                 bool declared_closed = true);
  // Harmonic representative (2 pi flux / L) dt on a product cylinder/circle.
  static OneForm harmonic_flux(double flux, double L);
  static OneForm h_only(Real1Fn H);
  static OneForm zero();

  // Total components, exact-gradient part included.
  double f(double r, double t) const;
  double h(double r, double t) const;

  // Base components without the tracked gradient part.
  double f_base(double r, double t) const;
  double h_base(double r, double t) const;

  OneForm plus_gradient(const GaugeFunction& g) const;

  const std::optional<GaugeFunction>& gauge_part() const { return gauge_; }
  bool declared_closed() const { return declared_closed_; }

 private:
  SurfaceFn2 f_, h_;
  bool declared_closed_ = true;
  std::optional<GaugeFunction> gauge_;
};

// Verifies df/dt - dh/dr = 0 by central differences on an n x n sample grid
// of [0,r_max] x [0,t_max]; throws NotClosed beyond tol.
void check_closed(const OneForm& A, double r_max, double t_max,
                  double tol = 1e-8, int n = 17);

struct FluxValue {
  double phi = 0.0;    // (1/2pi) circulation
  double d_int = 0.0;  // distance to the nearest integer, in [0, 1/2]
};

struct ParamLoop {
  std::function<Vec2(double)> gamma;   // tau in [0,1] -> (r,t)
  std::function<Vec2(double)> dgamma;  // derivative w.r.t. tau
};

// Circle of circumference-parameter length T at fixed r.
ParamLoop coordinate_loop(double r, double T);

FluxValue flux_on_loop(const OneForm& A, const ParamLoop& loop, int n = 2049);

double dist_to_integers(double phi);

struct ReducedForm {
  Real1Fn H;            // A + d(gauge) = H(t) dt
  GaugeFunction gauge;  // gauge(r,t) = -int_0^r f(x,t) dx
};

// Gauge reduction of a closed form on the cylinder [0,r_max] x [0,t_period).
ReducedForm reduce_to_Hdt(const OneForm& A, double r_max, double t_period);

struct CircleGauge {
  double c = 0.0;        // harmonic coefficient: A ~ c * theta dt
  Real1Fn gauge;         // periodic primitive, gauge(0) = gauge(L) = 0
  Real1Fn theta_normalized;
};

// Harmonic (Coulomb) representative of H(t) dt on the metric circle; theta is
// rescaled so its integral over [0,L] equals L.
CircleGauge coulomb_gauge_circle(const Real1Fn& H, const Real1Fn& theta,
                                 double L);

}  // namespace magspec
