#include "magspec/quadrature.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace magspec {

double simpson(const RealFn& f, double a, double b, int n) {
  if (n < 3) n = 3;
  if (n % 2 == 0) ++n;
  const int m = n - 1;  // even number of intervals
  const double h = (b - a) / m;
  double sum = f(a) + f(b);
  for (int i = 1; i < m; ++i) {
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return sum * h / 3.0;
}

double periodic_trapezoid(const RealFn& f, double a, double b, int n) {
  if (n < 2) n = 2;
  const double h = (b - a) / n;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(a + i * h);
  return sum * h;
}

double gauss16(const RealFn& f, double a, double b) {
  // Abscissae/weights for 16-point Gauss-Legendre on [-1,1].
  static const std::array<double, 8> xs = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static const std::array<double, 8> ws = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 8; ++i) {
    sum += ws[i] * (f(c + r * xs[i]) + f(c - r * xs[i]));
  }
  return sum * r;
}

CumulativeIntegral::CumulativeIntegral(RealFn f, double a, double b, int panels)
    : f_(std::move(f)), a_(a), b_(b) {
  if (panels < 1) panels = 1;
  h_ = (b - a) / panels;
  prefix_.resize(panels + 1);
  prefix_[0] = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a_ + i * h_;
    const double x1 = x0 + h_;
    const double mid = 0.5 * (x0 + x1);
    prefix_[i + 1] =
        prefix_[i] + (f_(x0) + 4.0 * f_(mid) + f_(x1)) * h_ / 6.0;
  }
}

double CumulativeIntegral::operator()(double x) const {
  if (prefix_.empty()) return 0.0;
  if (x <= a_) return 0.0;
  if (x >= b_) return prefix_.back();
  const int panels = static_cast<int>(prefix_.size()) - 1;
  int i = static_cast<int>((x - a_) / h_);
  if (i >= panels) i = panels - 1;
  const double x0 = a_ + i * h_;
  const double mid = 0.5 * (x0 + x);
  const double part = (f_(x0) + 4.0 * f_(mid) + f_(x)) * (x - x0) / 6.0;
  return prefix_[i] + part;
}

}  // namespace magspec
