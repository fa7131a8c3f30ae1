#pragma once

#include <memory>
#include <string>
#include <vector>

#include "magspec/vec2.hpp"

namespace magspec {

// Closed plane curve parametrized by u in [0,1), traversed counterclockwise.
// Derivatives fall back to central differences at resolution n_curve when a
// subclass has no analytic expression.
class ClosedCurve {
 public:
  virtual ~ClosedCurve() = default;

  virtual Vec2 position(double u) const = 0;
  virtual Vec2 derivative(double u) const;
  virtual Vec2 second_derivative(double u) const;

  // Parameter values where the curve is only piecewise smooth (empty for
  // analytic families); quadratures split at these points.
  virtual std::vector<double> parameter_breakpoints() const { return {}; }

  int sample_resolution() const { return n_curve_; }

  Vec2 tangent(double u) const;
  // Unit normal pointing away from the enclosed region (CCW orientation).
  Vec2 outward_normal(double u) const;

 protected:
  int n_curve_ = 4096;
};

double curve_length(const ClosedCurve& c, int n_nodes = 4096);

// Signed curvature w.r.t. the CCW orientation; positive where the curve bends
// around the enclosed region (e.g. +1/R on a circle of radius R).
double curvature_at(const ClosedCurve& c, double u);

class CircleCurve : public ClosedCurve {
 public:
  CircleCurve(Vec2 center, double radius);
  Vec2 position(double u) const override;
  Vec2 derivative(double u) const override;
  Vec2 second_derivative(double u) const override;
  double radius() const { return radius_; }
  Vec2 center() const { return center_; }

 private:
  Vec2 center_;
  double radius_;
};

class EllipseCurve : public ClosedCurve {
 public:
  EllipseCurve(Vec2 center, double semi_a, double semi_b);
  Vec2 position(double u) const override;
  Vec2 derivative(double u) const override;
  Vec2 second_derivative(double u) const override;

 private:
  Vec2 center_;
  double a_, b_;
};

// Axis-aligned rectangle with circular corner fillets, parametrized by
// arc length (constant speed). Curvature is 0 on the sides and 1/corner_radius
// on the fillets.
class RoundedRectCurve : public ClosedCurve {
 public:
  RoundedRectCurve(Vec2 center, double half_width, double half_height,
                   double corner_radius = 0.05);
  Vec2 position(double u) const override;
  Vec2 derivative(double u) const override;
  Vec2 second_derivative(double u) const override;
  std::vector<double> parameter_breakpoints() const override;
  double total_length() const { return total_len_; }
  double corner_radius() const { return rc_; }

 private:
  struct Piece {
    bool is_arc;
    Vec2 start;      // straight: start point
    Vec2 dir;        // straight: unit direction
    Vec2 arc_center; // arc: fillet center
    double ang0;     // arc: start angle
    double len;      // piece length
    double cum0;     // cumulative length at piece start
  };
  const Piece& locate(double u, double& local_s) const;

  std::vector<Piece> pieces_;
  double total_len_ = 0.0;
  double rc_;
};

// Polar curve R(phi) = R0 * (1 + amp * exp(conc * (cos(phi - phi0) - 1))),
// a smooth periodic radial bump (amp > 0) or dent (amp < 0) on a circle.
class RadialBumpCurve : public ClosedCurve {
 public:
  RadialBumpCurve(Vec2 center, double base_radius, double amp, double conc,
                  double phi0 = 0.0);
  Vec2 position(double u) const override;
  Vec2 derivative(double u) const override;
  Vec2 second_derivative(double u) const override;

 private:
  double radial(double phi) const;
  double radial_d(double phi) const;
  double radial_dd(double phi) const;
  Vec2 center_;
  double r0_, amp_, conc_, phi0_;
};

// Periodic cubic spline through a closed list of points, uniform parameter.
class PeriodicSplineCurve : public ClosedCurve {
 public:
  explicit PeriodicSplineCurve(std::vector<Vec2> points);
  Vec2 position(double u) const override;
  Vec2 derivative(double u) const override;
  Vec2 second_derivative(double u) const override;
  std::vector<double> parameter_breakpoints() const override;

  // One "x y" pair per line; the polygon closes implicitly.
  static PeriodicSplineCurve from_point_file(const std::string& path);

 private:
  int segment(double u, double& local) const;
  std::vector<Vec2> pts_;
  std::vector<Vec2> m_;  // second derivatives at knots
  int n_ = 0;
};

}  // namespace magspec
