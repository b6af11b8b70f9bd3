// Copyright 2026 The frontal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Truncated bivariate Taylor arithmetic.
//
// A Jet2 of order N at base (u0, v0) stores
//
//   c[i][j] = d^{i+j} F / du^i dv^j (u0, v0) / (i! j!),   i + j <= N,
//
// so the jet is the polynomial sum c[i][j] (u - u0)^i (v - v0)^j truncated
// at total degree N. Binary operations require equal order and base.
//
// A Jet2 whose v-coefficients are all zero doubles as a univariate series in
// the u slot; curve computations (singular curves, solution series) use it
// that way through compose().

#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

#include "frontal/error.hpp"

namespace frontal {

struct Point2 {
  double u = 0.0;
  double v = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Vec3& operator-=(const Vec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Vec3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return dot(a, cross(b, c));
}

class Jet2 {
 public:
  static constexpr int kMaxOrder = 12;
  static constexpr int kDefaultOrder = 8;
  static constexpr std::size_t kMaxCoeffs =
      static_cast<std::size_t>((kMaxOrder + 1) * (kMaxOrder + 2) / 2);

  Jet2() = default;
  // Zero jet.
  Jet2(int order, Point2 base);

  static Jet2 constant(double c, int order, Point2 base = {});
  // Jets of the coordinate functions u and v themselves.
  static Jet2 u_var(int order, Point2 base);
  static Jet2 v_var(int order, Point2 base);

  static constexpr std::size_t coeff_count(int order) {
    return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
  }

  int order() const noexcept { return order_; }
  Point2 base() const noexcept { return base_; }

  // Normalized coefficient c[i][j]; zero when i + j exceeds the order.
  double coeff(int i, int j) const noexcept {
    if (i < 0 || j < 0 || i + j > order_) return 0.0;
    return c_[index(i, j)];
  }
  void set_coeff(int i, int j, double value);
  double value() const noexcept { return c_[0]; }

  // d^{i+j} F / du^i dv^j at the base point. Throws kOrderExceeded.
  double partial(int i, int j) const;

  double max_abs() const noexcept;
  bool is_finite() const noexcept;

  Jet2 truncated(int order) const;
  // Partial derivatives; the result has order - 1.
  Jet2 d_du() const;
  Jet2 d_dv() const;
  // Polynomial value at base + (du, dv).
  double evaluate(double du, double dv) const noexcept;
  // Taylor re-expansion of the truncated polynomial about another point.
  Jet2 recentered(Point2 new_base) const;

  Jet2 operator-() const;
  Jet2& operator+=(const Jet2& o);
  Jet2& operator-=(const Jet2& o);
  Jet2& operator*=(const Jet2& o);
  Jet2& operator/=(const Jet2& o);
  Jet2& operator+=(double s) noexcept {
    c_[0] += s;
    return *this;
  }
  Jet2& operator-=(double s) noexcept {
    c_[0] -= s;
    return *this;
  }
  Jet2& operator*=(double s) noexcept;
  Jet2& operator/=(double s) noexcept { return *this *= 1.0 / s; }

  friend bool operator==(const Jet2& a, const Jet2& b) noexcept;
  friend Jet2 divide(const Jet2& a, const Jet2& b);

 private:
  static constexpr std::size_t index(int i, int j) noexcept {
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }

  int order_ = 0;
  Point2 base_{};
  std::array<double, kMaxCoeffs> c_{};
};

// Throws kContractViolation unless a and b share order and base.
void require_compatible(const Jet2& a, const Jet2& b, const char* what);

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator+(Jet2 a, double s) { return a += s; }
inline Jet2 operator+(double s, Jet2 a) { return a += s; }
inline Jet2 operator-(Jet2 a, double s) { return a -= s; }
inline Jet2 operator-(double s, const Jet2& a) { return -a + s; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
inline Jet2 operator/(Jet2 a, double s) { return a /= s; }

// Truncated quotient a / b. Throws kDivisionByNonUnit when |b(base)| is
// below 1e-300 or below 1e-14 of b's coefficient scale.
Jet2 divide(const Jet2& a, const Jet2& b);
Jet2 operator/(double s, const Jet2& b);

// Exact quotient a / v for jets whose pure-u coefficients vanish
// (|c[i][0]| <= 1e-9 (1 + max|c|)). Only valid at base points with v0 = 0.
// The result has order - 1. Throws kNotDivisible.
Jet2 divide_exact_by_v(const Jet2& a);

// Exact quotient a / b where b vanishes at the base and has a nonzero linear
// part (b's constant term is ignored). Generalizes divide_exact_by_v to any
// divisor with a simple zero. Result order is min(order) - 1.
Jet2 divide_exact(const Jet2& a, const Jet2& b);

// Taylor expansion of outer(inner_u, inner_v). Inner jets share base and
// order; their constant terms must equal outer's base. The result has the
// inner order and base; outer's order must be at least that.
Jet2 compose(const Jet2& outer, const Jet2& inner_u, const Jet2& inner_v);

Jet2 pow(const Jet2& a, int exponent);
// Throws kDomainError when a(base) <= 0.
Jet2 sqrt(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);

std::ostream& operator<<(std::ostream& os, const Jet2& a);

struct JetVec3 {
  Jet2 x;
  Jet2 y;
  Jet2 z;

  int order() const noexcept { return x.order(); }
  Point2 base() const noexcept { return x.base(); }
  Vec3 value() const noexcept { return {x.value(), y.value(), z.value()}; }
  double max_abs() const noexcept;

  JetVec3 d_du() const { return {x.d_du(), y.d_du(), z.d_du()}; }
  JetVec3 d_dv() const { return {x.d_dv(), y.d_dv(), z.d_dv()}; }
  JetVec3 truncated(int order) const {
    return {x.truncated(order), y.truncated(order), z.truncated(order)};
  }
  JetVec3 recentered(Point2 p) const {
    return {x.recentered(p), y.recentered(p), z.recentered(p)};
  }
};

JetVec3 operator+(const JetVec3& a, const JetVec3& b);
JetVec3 operator-(const JetVec3& a, const JetVec3& b);
JetVec3 operator-(const JetVec3& a);
JetVec3 operator*(const Jet2& s, const JetVec3& a);
JetVec3 operator*(double s, const JetVec3& a);
Jet2 dot(const JetVec3& a, const JetVec3& b);
JetVec3 cross(const JetVec3& a, const JetVec3& b);
Jet2 det3(const JetVec3& a, const JetVec3& b, const JetVec3& c);
// Componentwise compose() with the same inner jets.
JetVec3 compose(const JetVec3& outer, const Jet2& inner_u, const Jet2& inner_v);
JetVec3 constant_vec(const Vec3& v, int order, Point2 base);

}  // namespace frontal
