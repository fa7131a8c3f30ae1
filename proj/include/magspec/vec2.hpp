#pragma once

#include <cmath>

namespace magspec {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2 operator-() const { return {-x, -y}; }

  double norm() const { return std::hypot(x, y); }
  double squared_norm() const { return x * x + y * y; }

  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }

  // Rotation by -90 degrees; for a CCW tangent this points outward.
  Vec2 rotated_cw() const { return {y, -x}; }
  Vec2 rotated_ccw() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

}  // namespace magspec
