#include "magspec/one_form.hpp"

#include <cmath>
#include <memory>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

OneForm OneForm::from_components(SurfaceFn2 f, SurfaceFn2 h,
                                 bool declared_closed) {
  OneForm a;
  a.f_ = std::move(f);
  a.h_ = std::move(h);
  a.declared_closed_ = declared_closed;
  return a;
}

OneForm OneForm::harmonic_flux(double flux, double L) {
  const double c = kTwoPi * flux / L;
  return from_components([](double, double) { return 0.0; },
                         [c](double, double) { return c; });
}

OneForm OneForm::h_only(Real1Fn H) {
  auto Hp = std::make_shared<Real1Fn>(std::move(H));
  return from_components([](double, double) { return 0.0; },
                         [Hp](double, double t) { return (*Hp)(t); });
}

OneForm OneForm::zero() {
  return from_components([](double, double) { return 0.0; },
                         [](double, double) { return 0.0; });
}

double OneForm::f_base(double r, double t) const { return f_ ? f_(r, t) : 0.0; }
double OneForm::h_base(double r, double t) const { return h_ ? h_(r, t) : 0.0; }

double OneForm::f(double r, double t) const {
  double v = f_base(r, t);
  if (gauge_) v += gauge_->dphi_dr(r, t);
  return v;
}

double OneForm::h(double r, double t) const {
  double v = h_base(r, t);
  if (gauge_) v += gauge_->dphi_dt(r, t);
  return v;
}

OneForm OneForm::plus_gradient(const GaugeFunction& g) const {
  OneForm out = *this;
  if (!gauge_) {
    out.gauge_ = g;
    return out;
  }
  const GaugeFunction prev = *gauge_;
  GaugeFunction combined;
  combined.phi = [prev, g](double r, double t) {
    return prev.phi(r, t) + g.phi(r, t);
  };
  combined.dphi_dr = [prev, g](double r, double t) {
    return prev.dphi_dr(r, t) + g.dphi_dr(r, t);
  };
  combined.dphi_dt = [prev, g](double r, double t) {
    return prev.dphi_dt(r, t) + g.dphi_dt(r, t);
  };
  out.gauge_ = combined;
  return out;
}

void check_closed(const OneForm& A, double r_max, double t_max, double tol,
                  int n) {
  const double hr = r_max / (n + 1);
  const double ht = t_max / (n + 1);
  const double step_r = hr * 1e-3;
  const double step_t = ht * 1e-3;
  double scale = 1.0;
  double worst = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double r = hr * i;
    for (int j = 1; j <= n; ++j) {
      const double t = ht * j;
      const double df_dt =
          (A.f(r, t + step_t) - A.f(r, t - step_t)) / (2.0 * step_t);
      const double dh_dr =
          (A.h(r + step_r, t) - A.h(r - step_r, t)) / (2.0 * step_r);
      worst = std::max(worst, std::abs(df_dt - dh_dr));
      scale = std::max({scale, std::abs(A.f(r, t)), std::abs(A.h(r, t))});
    }
  }
  if (worst > tol * scale) {
    throw NotClosed("1-form is not closed: max |df/dt - dh/dr| = " +
                    std::to_string(worst));
  }
}

ParamLoop coordinate_loop(double r, double T) {
  ParamLoop loop;
  loop.gamma = [r, T](double tau) { return Vec2{r, T * tau}; };
  loop.dgamma = [T](double) { return Vec2{0.0, T}; };
  return loop;
}

FluxValue flux_on_loop(const OneForm& A, const ParamLoop& loop, int n) {
  const Vec2 p0 = loop.gamma(0.0);
  const Vec2 p1 = loop.gamma(1.0);
  const double span = std::max({1.0, p0.norm(), p1.norm()});
  if ((p1 - p0).norm() > 1e-9 * span) {
    throw NotClosedLoop("loop endpoints differ; flux needs a closed loop");
  }
  const auto integrand = [&](double tau) {
    const Vec2 p = loop.gamma(tau);
    const Vec2 d = loop.dgamma(tau);
    return A.f(p.x, p.y) * d.x + A.h(p.x, p.y) * d.y;
  };
  FluxValue out;
  out.phi = simpson(integrand, 0.0, 1.0, n) / kTwoPi;
  out.d_int = dist_to_integers(out.phi);
  return out;
}

double dist_to_integers(double phi) {
  if (!std::isfinite(phi)) throw Error("flux must be finite");
  const double lo = std::floor(phi);
  return std::min(phi - lo, lo + 1.0 - phi);
}

ReducedForm reduce_to_Hdt(const OneForm& A, double r_max, double t_period) {
  check_closed(A, r_max, t_period, 1e-6);

  const double dt_step = t_period * 1e-6;
  auto phi_of = [A](double r, double t) {
    if (r == 0.0) return 0.0;
    return -simpson([&](double x) { return A.f(x, t); }, 0.0, r, 129);
  };

  GaugeFunction gauge;
  gauge.phi = phi_of;
  gauge.dphi_dr = [A](double r, double t) { return -A.f(r, t); };
  gauge.dphi_dt = [phi_of, dt_step](double r, double t) {
    return (phi_of(r, t + dt_step) - phi_of(r, t - dt_step)) / (2.0 * dt_step);
  };

  // After the gauge shift the dt-component must not depend on r.
  double scale = 1.0;
  double worst = 0.0;
  const int nn = 9;
  for (int i = 0; i <= nn; ++i) {
    const double r = r_max * i / nn;
    for (int j = 0; j < nn; ++j) {
      const double t = t_period * j / nn;
      const double ht = A.h(r, t) + gauge.dphi_dt(r, t);
      const double h0 = A.h(0.0, t);
      worst = std::max(worst, std::abs(ht - h0));
      scale = std::max(scale, std::abs(h0));
    }
  }
  if (worst > 1e-6 * scale) {
    throw NotClosed("gauge reduction left an r-dependent dt-component: " +
                    std::to_string(worst));
  }

  ReducedForm out;
  out.gauge = gauge;
  out.H = [A](double t) { return A.h(0.0, t); };
  return out;
}

CircleGauge coulomb_gauge_circle(const Real1Fn& H, const Real1Fn& theta,
                                 double L) {
  if (!(L > 0.0)) throw BadMetricProfile("circle length must be positive");
  const double vol = simpson(theta, 0.0, L, 4097);
  if (!(vol > 0.0) || !std::isfinite(vol)) {
    throw BadMetricProfile("metric profile must have positive finite volume");
  }
  const double rescale = L / vol;
  auto theta_n = [theta, rescale](double t) { return theta(t) * rescale; };

  const double check = simpson(theta_n, 0.0, L, 4097);
  if (std::abs(check - L) > 1e-9 * L) {
    throw BadMetricProfile("metric normalization failed");
  }

  auto H_int = std::make_shared<CumulativeIntegral>(H, 0.0, L, 4096);
  auto s_int = std::make_shared<CumulativeIntegral>(theta_n, 0.0, L, 4096);
  const double c = H_int->total() / L;

  CircleGauge out;
  out.c = c;
  out.theta_normalized = theta_n;
  out.gauge = [H_int, s_int, c](double t) {
    return -(*H_int)(t) + c * (*s_int)(t);
  };
  return out;
}

}  // namespace magspec
