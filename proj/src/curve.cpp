#include "magspec/curve.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "magspec/errors.hpp"
#include "magspec/quadrature.hpp"

namespace magspec {

namespace {

double wrap_unit(double u) {
  double w = u - std::floor(u);
  if (w >= 1.0) w = 0.0;
  return w;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

Vec2 ClosedCurve::derivative(double u) const {
  const double h = 1.0 / n_curve_;
  const Vec2 a = position(u + h);
  const Vec2 b = position(u - h);
  return (a - b) / (2.0 * h);
}

Vec2 ClosedCurve::second_derivative(double u) const {
  const double h = 1.0 / n_curve_;
  const Vec2 a = position(u + h);
  const Vec2 c = position(u);
  const Vec2 b = position(u - h);
  return (a - c * 2.0 + b) / (h * h);
}

Vec2 ClosedCurve::tangent(double u) const {
  const Vec2 d = derivative(u);
  const double n = d.norm();
  if (!(n > 1e-14) || !std::isfinite(n)) {
    throw NonRegularCurve("zero or non-finite tangent at u=" + std::to_string(u));
  }
  return d / n;
}

Vec2 ClosedCurve::outward_normal(double u) const {
  return tangent(u).rotated_cw();
}

double curve_length(const ClosedCurve& c, int n_nodes) {
  const auto speed = [&c](double u) {
    const double s = c.derivative(u).norm();
    if (!std::isfinite(s)) throw NonRegularCurve("non-finite derivative sample");
    return s;
  };
  std::vector<double> brk = c.parameter_breakpoints();
  if (brk.empty()) {
    return periodic_trapezoid(speed, 0.0, 1.0, n_nodes);
  }
  std::sort(brk.begin(), brk.end());
  if (brk.front() > 0.0) brk.insert(brk.begin(), 0.0);
  if (brk.back() < 1.0) brk.push_back(1.0);
  double total = 0.0;
  for (size_t i = 0; i + 1 < brk.size(); ++i) {
    const double a = brk[i], b = brk[i + 1];
    if (b - a < 1e-15) continue;
    const int chunks = std::max(2, static_cast<int>((b - a) * n_nodes / 16.0));
    const double h = (b - a) / chunks;
    for (int j = 0; j < chunks; ++j) {
      total += gauss16(speed, a + j * h, a + (j + 1) * h);
    }
  }
  return total;
}

double curvature_at(const ClosedCurve& c, double u) {
  const Vec2 d1 = c.derivative(u);
  const Vec2 d2 = c.second_derivative(u);
  const double sp = d1.norm();
  if (!(sp > 1e-14) || !std::isfinite(sp)) {
    throw NonRegularCurve("zero tangent while evaluating curvature");
  }
  return cross(d1, d2) / (sp * sp * sp);
}

// ---------------------------------------------------------------------------
// CircleCurve

CircleCurve::CircleCurve(Vec2 center, double radius)
    : center_(center), radius_(radius) {
  if (!(radius > 0.0)) throw NonRegularCurve("circle radius must be positive");
}

Vec2 CircleCurve::position(double u) const {
  const double a = kTwoPi * u;
  return center_ + Vec2{radius_ * std::cos(a), radius_ * std::sin(a)};
}

Vec2 CircleCurve::derivative(double u) const {
  const double a = kTwoPi * u;
  return {-kTwoPi * radius_ * std::sin(a), kTwoPi * radius_ * std::cos(a)};
}

Vec2 CircleCurve::second_derivative(double u) const {
  const double a = kTwoPi * u;
  const double s = kTwoPi * kTwoPi * radius_;
  return {-s * std::cos(a), -s * std::sin(a)};
}

// ---------------------------------------------------------------------------
// EllipseCurve

EllipseCurve::EllipseCurve(Vec2 center, double semi_a, double semi_b)
    : center_(center), a_(semi_a), b_(semi_b) {
  if (!(semi_a > 0.0) || !(semi_b > 0.0)) {
    throw NonRegularCurve("ellipse semi-axes must be positive");
  }
}

Vec2 EllipseCurve::position(double u) const {
  const double t = kTwoPi * u;
  return center_ + Vec2{a_ * std::cos(t), b_ * std::sin(t)};
}

Vec2 EllipseCurve::derivative(double u) const {
  const double t = kTwoPi * u;
  return {-kTwoPi * a_ * std::sin(t), kTwoPi * b_ * std::cos(t)};
}

Vec2 EllipseCurve::second_derivative(double u) const {
  const double t = kTwoPi * u;
  const double s = kTwoPi * kTwoPi;
  return {-s * a_ * std::cos(t), -s * b_ * std::sin(t)};
}

// ---------------------------------------------------------------------------
// RoundedRectCurve

RoundedRectCurve::RoundedRectCurve(Vec2 center, double half_width,
                                   double half_height, double corner_radius)
    : rc_(corner_radius) {
  if (!(corner_radius > 0.0) || corner_radius >= std::min(half_width, half_height)) {
    throw NonRegularCurve("corner radius out of range");
  }
  const double cx = center.x, cy = center.y;
  const double sx = half_width - rc_, sy = half_height - rc_;
  const double half_pi = 1.5707963267948966;

  auto add_straight = [this](Vec2 start, Vec2 dir, double len) {
    Piece p;
    p.is_arc = false;
    p.start = start;
    p.dir = dir;
    p.len = len;
    p.cum0 = total_len_;
    total_len_ += len;
    pieces_.push_back(p);
  };
  auto add_arc = [this, half_pi](Vec2 arc_center, double ang0) {
    Piece p;
    p.is_arc = true;
    p.arc_center = arc_center;
    p.ang0 = ang0;
    p.len = rc_ * half_pi;
    p.cum0 = total_len_;
    total_len_ += p.len;
    pieces_.push_back(p);
  };

  add_straight({cx + half_width, cy - sy}, {0, 1}, 2 * sy);
  add_arc({cx + sx, cy + sy}, 0.0);
  add_straight({cx + sx, cy + half_height}, {-1, 0}, 2 * sx);
  add_arc({cx - sx, cy + sy}, half_pi);
  add_straight({cx - half_width, cy + sy}, {0, -1}, 2 * sy);
  add_arc({cx - sx, cy - sy}, 2 * half_pi);
  add_straight({cx - sx, cy - half_height}, {1, 0}, 2 * sx);
  add_arc({cx + sx, cy - sy}, 3 * half_pi);
}

const RoundedRectCurve::Piece& RoundedRectCurve::locate(double u,
                                                        double& local_s) const {
  const double s = wrap_unit(u) * total_len_;
  size_t lo = 0, hi = pieces_.size();
  while (hi - lo > 1) {
    const size_t mid = (lo + hi) / 2;
    if (pieces_[mid].cum0 <= s) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  local_s = s - pieces_[lo].cum0;
  return pieces_[lo];
}

Vec2 RoundedRectCurve::position(double u) const {
  double s;
  const Piece& p = locate(u, s);
  if (!p.is_arc) return p.start + p.dir * s;
  const double ang = p.ang0 + s / rc_;
  return p.arc_center + Vec2{rc_ * std::cos(ang), rc_ * std::sin(ang)};
}

Vec2 RoundedRectCurve::derivative(double u) const {
  double s;
  const Piece& p = locate(u, s);
  if (!p.is_arc) return p.dir * total_len_;
  const double ang = p.ang0 + s / rc_;
  return Vec2{-std::sin(ang), std::cos(ang)} * total_len_;
}

Vec2 RoundedRectCurve::second_derivative(double u) const {
  double s;
  const Piece& p = locate(u, s);
  if (!p.is_arc) return {0, 0};
  const double ang = p.ang0 + s / rc_;
  const double f = total_len_ * total_len_ / rc_;
  return Vec2{-std::cos(ang), -std::sin(ang)} * f;
}

std::vector<double> RoundedRectCurve::parameter_breakpoints() const {
  std::vector<double> b;
  b.reserve(pieces_.size());
  for (const Piece& p : pieces_) b.push_back(p.cum0 / total_len_);
  return b;
}

// ---------------------------------------------------------------------------
// RadialBumpCurve

RadialBumpCurve::RadialBumpCurve(Vec2 center, double base_radius, double amp,
                                 double conc, double phi0)
    : center_(center), r0_(base_radius), amp_(amp), conc_(conc), phi0_(phi0) {
  if (!(base_radius > 0.0) || conc < 0.0) {
    throw NonRegularCurve("invalid radial bump parameters");
  }
  if (1.0 + amp_ <= 0.0) throw NonRegularCurve("bump depth exceeds radius");
}

double RadialBumpCurve::radial(double phi) const {
  return r0_ * (1.0 + amp_ * std::exp(conc_ * (std::cos(phi - phi0_) - 1.0)));
}

double RadialBumpCurve::radial_d(double phi) const {
  const double psi = phi - phi0_;
  const double e = std::exp(conc_ * (std::cos(psi) - 1.0));
  return r0_ * amp_ * e * (-conc_ * std::sin(psi));
}

double RadialBumpCurve::radial_dd(double phi) const {
  const double psi = phi - phi0_;
  const double e = std::exp(conc_ * (std::cos(psi) - 1.0));
  const double s = std::sin(psi), c = std::cos(psi);
  return r0_ * amp_ * e * (conc_ * conc_ * s * s - conc_ * c);
}

Vec2 RadialBumpCurve::position(double u) const {
  const double phi = kTwoPi * u;
  const double r = radial(phi);
  return center_ + Vec2{r * std::cos(phi), r * std::sin(phi)};
}

Vec2 RadialBumpCurve::derivative(double u) const {
  const double phi = kTwoPi * u;
  const double r = radial(phi), rd = radial_d(phi);
  const Vec2 e{std::cos(phi), std::sin(phi)};
  const Vec2 n{-std::sin(phi), std::cos(phi)};
  return (e * rd + n * r) * kTwoPi;
}

Vec2 RadialBumpCurve::second_derivative(double u) const {
  const double phi = kTwoPi * u;
  const double r = radial(phi), rd = radial_d(phi), rdd = radial_dd(phi);
  const Vec2 e{std::cos(phi), std::sin(phi)};
  const Vec2 n{-std::sin(phi), std::cos(phi)};
  return (e * (rdd - r) + n * (2.0 * rd)) * (kTwoPi * kTwoPi);
}

// ---------------------------------------------------------------------------
// PeriodicSplineCurve

PeriodicSplineCurve::PeriodicSplineCurve(std::vector<Vec2> points)
    : pts_(std::move(points)), n_(static_cast<int>(pts_.size())) {
  if (n_ < 4) throw NonRegularCurve("spline needs at least 4 points");
  const double h = 1.0 / n_;

  // Periodic cubic spline moments: m[i-1] + 4 m[i] + m[i+1] = rhs[i], cyclic.
  // Solved per component with the Sherman-Morrison correction of a Thomas
  // sweep.
  auto solve_cyclic = [this, h](auto value_of) {
    const int n = n_;
    std::vector<double> rhs(n);
    for (int i = 0; i < n; ++i) {
      const double prev = value_of(pts_[(i + n - 1) % n]);
      const double cur = value_of(pts_[i]);
      const double next = value_of(pts_[(i + 1) % n]);
      rhs[i] = 6.0 * (prev - 2.0 * cur + next) / (h * h);
    }
    const double diag = 4.0, off = 1.0;
    // Cyclic system (diag on main, off on sub/super and corners).
    const double gamma = -diag;
    std::vector<double> b(n, diag), u(n, 0.0);
    b[0] = diag - gamma;
    b[n - 1] = diag - off * off / gamma;
    u[0] = gamma;
    u[n - 1] = off;
    auto thomas = [&](const std::vector<double>& d_in) {
      std::vector<double> c(n), x(n);
      std::vector<double> d = d_in;
      std::vector<double> bb = b;
      for (int i = 1; i < n; ++i) {
        const double m = off / bb[i - 1];
        bb[i] -= m * off;
        d[i] -= m * d[i - 1];
      }
      x[n - 1] = d[n - 1] / bb[n - 1];
      for (int i = n - 2; i >= 0; --i) {
        x[i] = (d[i] - off * x[i + 1]) / bb[i];
      }
      (void)c;
      return x;
    };
    std::vector<double> y = thomas(rhs);
    std::vector<double> z = thomas(u);
    const double fact =
        (y[0] + off * y[n - 1] / gamma) / (1.0 + z[0] + off * z[n - 1] / gamma);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = y[i] - fact * z[i];
    return x;
  };

  const std::vector<double> mx = solve_cyclic([](const Vec2& p) { return p.x; });
  const std::vector<double> my = solve_cyclic([](const Vec2& p) { return p.y; });
  m_.resize(n_);
  for (int i = 0; i < n_; ++i) m_[i] = {mx[i], my[i]};
}

int PeriodicSplineCurve::segment(double u, double& local) const {
  const double w = wrap_unit(u) * n_;
  int i = static_cast<int>(w);
  if (i >= n_) i = n_ - 1;
  local = w - i;  // in [0,1) across segment i
  return i;
}

Vec2 PeriodicSplineCurve::position(double u) const {
  double tau;
  const int i = segment(u, tau);
  const int j = (i + 1) % n_;
  const double h = 1.0 / n_;
  const double a = 1.0 - tau;
  const double cubic_a = (a * a * a - a) * h * h / 6.0;
  const double cubic_b = (tau * tau * tau - tau) * h * h / 6.0;
  return pts_[i] * a + pts_[j] * tau + m_[i] * cubic_a + m_[j] * cubic_b;
}

Vec2 PeriodicSplineCurve::derivative(double u) const {
  double tau;
  const int i = segment(u, tau);
  const int j = (i + 1) % n_;
  const double h = 1.0 / n_;
  const double a = 1.0 - tau;
  const Vec2 lin = (pts_[j] - pts_[i]) / h;
  const Vec2 cub =
      m_[i] * ((-3.0 * a * a + 1.0) * h / 6.0) + m_[j] * ((3.0 * tau * tau - 1.0) * h / 6.0);
  return lin + cub;
}

Vec2 PeriodicSplineCurve::second_derivative(double u) const {
  double tau;
  const int i = segment(u, tau);
  const int j = (i + 1) % n_;
  return m_[i] * (1.0 - tau) + m_[j] * tau;
}

std::vector<double> PeriodicSplineCurve::parameter_breakpoints() const {
  std::vector<double> b(n_);
  for (int i = 0; i < n_; ++i) b[i] = static_cast<double>(i) / n_;
  return b;
}

PeriodicSplineCurve PeriodicSplineCurve::from_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadConfig("cannot open curve point file: " + path);
  std::vector<Vec2> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    double x, y;
    if (!(ss >> x >> y)) {
      throw BadConfig("curve point file " + path + ": parse error at line " +
                      std::to_string(lineno));
    }
    pts.push_back({x, y});
  }
  return PeriodicSplineCurve(std::move(pts));
}

}  // namespace magspec
