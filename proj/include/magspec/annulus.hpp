#pragma once

#include <memory>
#include <vector>

#include "magspec/curve.hpp"
#include "magspec/vec2.hpp"

namespace magspec {

struct RayHit {
  Vec2 q;              // first intersection with the outer curve
  double r = 0.0;      // ray length |q - x|
  double cos_theta = 0.0;
  double theta_x = 0.0;    // angle to the outer normal at q, in [0, pi]
  double outer_param = 0.0;  // parameter of q on the outer curve
  bool degenerate = false;   // tangential grazing
};

struct StarlikeReport {
  bool is_starlike = false;
  double m = 0.0;  // min cos(theta_x) over samples
  double m_refine_delta = 0.0;
};

struct AnnulusConstants {
  double beta = 0.0;  // min ray length
  double B = 0.0;     // max ray length
  double m = 0.0;     // min cos(theta_x)
  double L = 0.0;     // outer boundary length
  double l = 0.0;     // inner boundary length
  double refine_delta = 0.0;  // largest shift seen while refining extrema
};

struct FoliationConstants {
  double K = 1.0;
  double L = 0.0;
  double sup_grad = 1.0;
  double inf_grad = 1.0;
  double K_bound = 1.0;  // a-priori ratio bound (B/(beta*m) on annuli)
};

// Planar annulus bounded by a convex inner curve and an outer curve, with the
// outward-ray transversal structure sampled at n_rays parameters.
class AnnulusDomain {
 public:
  AnnulusDomain(std::shared_ptr<const ClosedCurve> inner,
                std::shared_ptr<const ClosedCurve> outer, int n_rays = 4096);

  RayHit ray_map(double u) const;

  StarlikeReport starlike_check() const;
  AnnulusConstants constants() const;

  const ClosedCurve& sigma1() const { return *inner_; }
  const ClosedCurve& sigma2() const { return *outer_; }
  std::shared_ptr<const ClosedCurve> inner_ptr() const { return inner_; }
  std::shared_ptr<const ClosedCurve> outer_ptr() const { return outer_; }
  int n_rays() const { return n_rays_; }
  const std::vector<RayHit>& ray_table() const { return rays_; }

  double inner_length() const { return inner_len_; }
  double outer_length() const { return outer_len_; }

 private:
  RayHit trace_ray(const Vec2& x, const Vec2& n) const;

  std::shared_ptr<const ClosedCurve> inner_;
  std::shared_ptr<const ClosedCurve> outer_;
  int n_rays_;
  std::vector<Vec2> outer_samples_;
  std::vector<RayHit> rays_;
  double inner_len_ = 0.0, outer_len_ = 0.0;
};

// Fermi-type coordinates (t,s): s arc length on the inner curve, t distance
// along the outward normal ray; metric dt^2 + Theta^2 ds^2 with
// Theta = 1 + t k(s). Valid strictly starlike annuli only.
class AnnulusNormalCoords {
 public:
  explicit AnnulusNormalCoords(const AnnulusDomain& ann);

  double inner_length() const { return l_; }
  double beta() const { return beta_; }
  double Bmax() const { return bmax_; }
  double m() const { return m_; }
  double outer_length() const { return outer_len_; }

  double rho(double s) const;
  double drho_ds(double s) const;
  double curvature(double s) const;
  double Theta(double t, double s) const { return 1.0 + t * curvature(s); }

  // |grad psi|^2 for the ray-linear foliation psi = t/rho(s).
  double grad_psi_sq(double t, double s) const;

  Vec2 point(double t, double s) const;   // gamma(s) + t N(s)
  Vec2 ray_direction(double s) const;     // N(s)
  Vec2 base_point(double s) const;        // gamma(s)
  double u_of_s(double s) const;

  int table_size() const { return n_; }
  double s_at(int i) const { return s_[i]; }

 private:
  int locate(double s, double& w) const;

  std::shared_ptr<const ClosedCurve> inner_;
  int n_ = 0;
  double l_ = 0.0, beta_ = 0.0, bmax_ = 0.0, m_ = 0.0, outer_len_ = 0.0;
  std::vector<double> s_, u_, rho_, drho_, k_;
};

FoliationConstants foliation_K_annulus(const AnnulusDomain& ann, int n_t = 512,
                                       int n_s = 512);

// Length of the foliation level {psi = r}, r in [0,1].
double level_curve_length(const AnnulusDomain& ann, double r);
double level_curve_length(const AnnulusNormalCoords& coords, double r);

}  // namespace magspec
