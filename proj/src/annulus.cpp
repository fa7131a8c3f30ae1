#include "magspec/annulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec {

namespace {

double wrap_unit(double u) {
  double w = u - std::floor(u);
  if (w >= 1.0) w = 0.0;
  return w;
}

// Winding angle of the sampled polygon around p (2 pi for interior points of
// a CCW curve, 0 outside).
double winding_angle(const std::vector<Vec2>& poly, const Vec2& p) {
  double total = 0.0;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i] - p;
    const Vec2 b = poly[(i + 1) % n] - p;
    total += std::atan2(cross(a, b), dot(a, b));
  }
  return total;
}

constexpr double kGrazingTol = 1e-10;

}  // namespace

AnnulusDomain::AnnulusDomain(std::shared_ptr<const ClosedCurve> inner,
                             std::shared_ptr<const ClosedCurve> outer,
                             int n_rays)
    : inner_(std::move(inner)), outer_(std::move(outer)), n_rays_(n_rays) {
  if (n_rays_ < 16) n_rays_ = 16;

  const int n_scan = std::max(n_rays_, 4096);
  outer_samples_.resize(n_scan);
  for (int i = 0; i < n_scan; ++i) {
    outer_samples_[i] = outer_->position(static_cast<double>(i) / n_scan);
  }

  // Inner curve must be convex and strictly inside the outer curve.
  for (int i = 0; i < n_rays_; ++i) {
    const double u = static_cast<double>(i) / n_rays_;
    if (curvature_at(*inner_, u) < -1e-10) {
      throw NotStarlike("inner curve is not convex (curvature < -1e-10)");
    }
  }
  const double two_pi = 6.283185307179586;
  for (int i = 0; i < 64; ++i) {
    const Vec2 p = inner_->position(i / 64.0);
    if (std::abs(winding_angle(outer_samples_, p) - two_pi) > 0.5) {
      throw NotStarlike("inner curve is not strictly inside the outer curve");
    }
  }

  inner_len_ = curve_length(*inner_);
  outer_len_ = curve_length(*outer_);

  rays_.resize(n_rays_);
  for (int i = 0; i < n_rays_; ++i) {
    const double u = static_cast<double>(i) / n_rays_;
    rays_[i] = trace_ray(inner_->position(u), inner_->outward_normal(u));
  }
}

RayHit AnnulusDomain::trace_ray(const Vec2& x, const Vec2& n) const {
  // Signed perpendicular offset of outer-curve points from the ray line;
  // zero crossings with positive ray coordinate are candidate hits.
  const auto offset = [&](double v) { return cross(outer_->position(v) - x, n); };

  const int n_scan = static_cast<int>(outer_samples_.size());
  std::vector<double> off(n_scan);
  for (int i = 0; i < n_scan; ++i) off[i] = cross(outer_samples_[i] - x, n);

  double best_t = -1.0;
  double best_v = 0.0;
  for (int i = 0; i < n_scan; ++i) {
    const int j = (i + 1) % n_scan;
    const double fa = off[i], fb = off[j];
    if (fa == 0.0) {
      const double t = dot(outer_samples_[i] - x, n);
      if (t > 1e-10 && (best_t < 0.0 || t < best_t)) {
        best_t = t;
        best_v = static_cast<double>(i) / n_scan;
      }
      continue;
    }
    if (fa * fb >= 0.0) continue;
    double a = static_cast<double>(i) / n_scan;
    double b = static_cast<double>(i + 1) / n_scan;
    double va = fa;
    for (int it = 0; it < 52; ++it) {
      const double mid = 0.5 * (a + b);
      const double vm = offset(mid);
      if (vm == 0.0) {
        a = b = mid;
        break;
      }
      if (va * vm < 0.0) {
        b = mid;
      } else {
        a = mid;
        va = vm;
      }
    }
    const double v = 0.5 * (a + b);
    const double t = dot(outer_->position(v) - x, n);
    if (t > 1e-10 && (best_t < 0.0 || t < best_t)) {
      best_t = t;
      best_v = v;
    }
  }

  if (best_t < 0.0) {
    throw RayEscapes("outward ray does not meet the outer curve");
  }

  RayHit hit;
  hit.q = outer_->position(best_v);
  hit.r = best_t;
  hit.outer_param = wrap_unit(best_v);
  const Vec2 outer_n = outer_->outward_normal(best_v);
  double c = dot(n, outer_n);
  c = std::clamp(c, -1.0, 1.0);
  hit.cos_theta = c;
  hit.theta_x = std::acos(c);
  hit.degenerate = std::abs(c) < kGrazingTol;
  return hit;
}

RayHit AnnulusDomain::ray_map(double u) const {
  const RayHit hit = trace_ray(inner_->position(u), inner_->outward_normal(u));
  if (hit.degenerate) {
    throw DegenerateRay("ray grazes the outer curve tangentially at u=" +
                        std::to_string(u));
  }
  return hit;
}

namespace {

// Shrinking-window refinement of an extremum of g over the periodic unit
// parameter, starting from the coarse arg-extremum.
template <typename G>
double refine_extremum(const G& g, double u_center, double window,
                       bool minimize) {
  double best_u = u_center;
  double best = g(u_center);
  for (int round = 0; round < 4; ++round) {
    const int pts = 33;
    for (int i = 0; i < pts; ++i) {
      const double u = best_u - window + (2.0 * window * i) / (pts - 1);
      const double val = g(u);
      if (minimize ? (val < best) : (val > best)) {
        best = val;
        best_u = u;
      }
    }
    window /= 16.0;
  }
  return best;
}

}  // namespace

StarlikeReport AnnulusDomain::starlike_check() const {
  StarlikeReport rep;
  bool any_degenerate = false;
  double m_samp = 2.0;
  int arg_m = 0;
  for (int i = 0; i < n_rays_; ++i) {
    if (rays_[i].degenerate) any_degenerate = true;
    if (rays_[i].cos_theta < m_samp) {
      m_samp = rays_[i].cos_theta;
      arg_m = i;
    }
  }

  // Cyclic strict monotonicity of the outer-parameter map.
  bool monotone = true;
  double total = 0.0;
  for (int i = 0; i < n_rays_; ++i) {
    const double a = rays_[i].outer_param;
    const double b = rays_[(i + 1) % n_rays_].outer_param;
    double dv = b - a;
    dv -= std::floor(dv);
    if (dv <= 0.0 || dv > 0.5) {
      monotone = false;
      break;
    }
    total += dv;
  }
  if (monotone && std::abs(total - 1.0) > 1e-9) monotone = false;

  rep.is_starlike = monotone && !any_degenerate;
  rep.m = m_samp;
  if (rep.is_starlike) {
    const auto cos_of = [this](double u) {
      return trace_ray(inner_->position(u), inner_->outward_normal(u)).cos_theta;
    };
    const double refined = refine_extremum(
        cos_of, static_cast<double>(arg_m) / n_rays_, 1.0 / n_rays_, true);
    rep.m_refine_delta = std::abs(refined - m_samp);
    rep.m = std::min(m_samp, refined);
  }
  return rep;
}

AnnulusConstants AnnulusDomain::constants() const {
  const StarlikeReport rep = starlike_check();
  if (!rep.is_starlike) {
    throw NotStarlike("annulus is not starlike w.r.t. its inner curve");
  }
  AnnulusConstants c;
  c.m = rep.m;
  c.L = outer_len_;
  c.l = inner_len_;

  double r_min = rays_[0].r, r_max = rays_[0].r;
  int arg_min = 0, arg_max = 0;
  for (int i = 1; i < n_rays_; ++i) {
    if (rays_[i].r < r_min) {
      r_min = rays_[i].r;
      arg_min = i;
    }
    if (rays_[i].r > r_max) {
      r_max = rays_[i].r;
      arg_max = i;
    }
  }
  const auto r_of = [this](double u) {
    return trace_ray(inner_->position(u), inner_->outward_normal(u)).r;
  };
  const double beta_ref = refine_extremum(
      r_of, static_cast<double>(arg_min) / n_rays_, 1.0 / n_rays_, true);
  const double b_ref = refine_extremum(
      r_of, static_cast<double>(arg_max) / n_rays_, 1.0 / n_rays_, false);
  c.beta = std::min(r_min, beta_ref);
  c.B = std::max(r_max, b_ref);
  c.refine_delta = std::max({std::abs(beta_ref - r_min),
                             std::abs(b_ref - r_max), rep.m_refine_delta});
  return c;
}

// ---------------------------------------------------------------------------
// AnnulusNormalCoords

AnnulusNormalCoords::AnnulusNormalCoords(const AnnulusDomain& ann)
    : inner_(ann.inner_ptr()) {
  const AnnulusConstants cst = ann.constants();
  if (!(cst.m > 0.0)) {
    throw NotStrictlyStarlike("normal coordinates need m > 0");
  }
  beta_ = cst.beta;
  bmax_ = cst.B;
  m_ = cst.m;
  outer_len_ = cst.L;

  const int n = ann.n_rays();
  n_ = n;
  const ClosedCurve& inner = ann.sigma1();

  const auto speed = [&inner](double u) { return inner.derivative(u).norm(); };
  CumulativeIntegral arclen(speed, 0.0, 1.0, n);
  l_ = arclen.total();

  s_.resize(n + 1);
  u_.resize(n + 1);
  rho_.resize(n + 1);
  drho_.resize(n + 1);
  k_.resize(n + 1);
  const auto& rays = ann.ray_table();
  for (int i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / n;
    u_[i] = u;
    s_[i] = arclen(u);
    rho_[i] = rays[i].r;
    k_[i] = std::max(0.0, curvature_at(inner, u));
  }
  // Periodic closure.
  u_[n] = 1.0;
  s_[n] = l_;
  rho_[n] = rho_[0];
  k_[n] = k_[0];
  // d(rho)/ds by central differences in the periodic table.
  for (int i = 0; i < n; ++i) {
    const double prev = rho_[(i + n - 1) % n];
    const double next = rho_[(i + 1) % n];
    const double du = 2.0 / n;
    drho_[i] = (next - prev) / du / speed(u_[i]);
  }
  drho_[n] = drho_[0];
}

int AnnulusNormalCoords::locate(double s, double& w) const {
  double sw = s - std::floor(s / l_) * l_;
  if (sw >= l_) sw = 0.0;
  // s_ is strictly increasing; binary search for the bracketing interval.
  int lo = 0, hi = n_;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (s_[mid] <= sw) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double span = s_[lo + 1] - s_[lo];
  w = span > 0.0 ? (sw - s_[lo]) / span : 0.0;
  return lo;
}

double AnnulusNormalCoords::rho(double s) const {
  double w;
  const int i = locate(s, w);
  return rho_[i] * (1.0 - w) + rho_[i + 1] * w;
}

double AnnulusNormalCoords::drho_ds(double s) const {
  double w;
  const int i = locate(s, w);
  return drho_[i] * (1.0 - w) + drho_[i + 1] * w;
}

double AnnulusNormalCoords::curvature(double s) const {
  double w;
  const int i = locate(s, w);
  return k_[i] * (1.0 - w) + k_[i + 1] * w;
}

double AnnulusNormalCoords::u_of_s(double s) const {
  double w;
  const int i = locate(s, w);
  return u_[i] * (1.0 - w) + u_[i + 1] * w;
}

double AnnulusNormalCoords::grad_psi_sq(double t, double s) const {
  const double p = rho(s);
  const double dp = drho_ds(s);
  const double th = Theta(t, s);
  const double num = th * th * p * p + t * t * dp * dp;
  const double den = th * th * p * p * p * p;
  return num / den;
}

Vec2 AnnulusNormalCoords::point(double t, double s) const {
  return base_point(s) + ray_direction(s) * t;
}

Vec2 AnnulusNormalCoords::base_point(double s) const {
  return inner_->position(u_of_s(s));
}

Vec2 AnnulusNormalCoords::ray_direction(double s) const {
  return inner_->outward_normal(u_of_s(s));
}

// ---------------------------------------------------------------------------

FoliationConstants foliation_K_annulus(const AnnulusDomain& ann, int n_t,
                                       int n_s) {
  const AnnulusConstants cst = ann.constants();
  if (!(cst.m > 0.0)) {
    throw NotStrictlyStarlike("foliation constants need m > 0");
  }
  AnnulusNormalCoords coords(ann);

  double sup2 = 0.0;
  double inf2 = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n_s; ++j) {
    const double s = coords.inner_length() * j / n_s;
    const double p = coords.rho(s);
    for (int i = 0; i <= n_t; ++i) {
      const double t = p * i / n_t;
      const double g2 = coords.grad_psi_sq(t, s);
      sup2 = std::max(sup2, g2);
      inf2 = std::min(inf2, g2);
    }
  }

  FoliationConstants out;
  out.sup_grad = std::sqrt(sup2);
  out.inf_grad = std::sqrt(inf2);
  out.K = out.sup_grad / out.inf_grad;
  out.L = cst.L;
  out.K_bound = cst.B / (cst.beta * cst.m);
  if (out.K > out.K_bound * (1.0 + 1e-6)) {
    throw Error("foliation ratio exceeds its a-priori bound; geometry data inconsistent");
  }
  return out;
}

double level_curve_length(const AnnulusNormalCoords& coords, double r) {
  const double l = coords.inner_length();
  const int n = coords.table_size();
  const auto integrand = [&](double s) {
    const double dp = coords.drho_ds(s);
    const double k = coords.curvature(s);
    const double p = coords.rho(s);
    const double a = r * dp;
    const double b = 1.0 + r * k * p;
    return std::sqrt(a * a + b * b);
  };
  return periodic_trapezoid(integrand, 0.0, l, n);
}

double level_curve_length(const AnnulusDomain& ann, double r) {
  AnnulusNormalCoords coords(ann);
  return level_curve_length(coords, r);
}

}  // namespace magspec
