#pragma once

#include <functional>
#include <vector>

namespace magspec {

using RealFn = std::function<double(double)>;

// Composite Simpson on [a,b] with n nodes (n odd, n >= 3).
double simpson(const RealFn& f, double a, double b, int n = 2049);

// Trapezoid rule over one period [a,b) of a periodic integrand; converges
// spectrally for smooth periodic data.
double periodic_trapezoid(const RealFn& f, double a, double b, int n = 2048);

// Gauss-Legendre with 16 nodes on [a,b].
double gauss16(const RealFn& f, double a, double b);

// Prefix integral F(x) = int_a^x f, precomputed per panel with Simpson and
// evaluated at arbitrary x by a partial-panel rule. Accurate to ~1e-13 for
// smooth f at the default panel count.
class CumulativeIntegral {
 public:
  CumulativeIntegral() = default;
  CumulativeIntegral(RealFn f, double a, double b, int panels = 4096);

  double operator()(double x) const;
  double total() const { return prefix_.empty() ? 0.0 : prefix_.back(); }
  double lower() const { return a_; }
  double upper() const { return b_; }

 private:
  RealFn f_;
  double a_ = 0.0, b_ = 1.0, h_ = 1.0;
  std::vector<double> prefix_;  // prefix_[i] = int_a^{a+i*h}
};

}  // namespace magspec
