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

#include "frontal/jet.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace frontal {
namespace {

constexpr int kN = Jet2::kMaxOrder;

struct Tables {
  double fact[kN + 1];
  double binom[kN + 1][kN + 1];
  constexpr Tables() : fact{}, binom{} {
    fact[0] = 1.0;
    for (int n = 1; n <= kN; ++n) fact[n] = fact[n - 1] * n;
    for (int n = 0; n <= kN; ++n) {
      binom[n][0] = 1.0;
      for (int k = 1; k <= n; ++k) {
        binom[n][k] = binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0.0);
      }
    }
  }
};
constexpr Tables kTables;

void check_order(int order) {
  if (order < 0 || order > kN) {
    throw Error(ErrorCode::kOrderExceeded,
                "jet order " + std::to_string(order) + " outside [0, " +
                    std::to_string(kN) + "]");
  }
}

// Horner evaluation of sum_n coeffs[n] * delta^n with delta(base) = 0.
Jet2 univariate_series(const std::vector<double>& coeffs, const Jet2& delta) {
  Jet2 r = Jet2::constant(coeffs.back(), delta.order(), delta.base());
  for (int n = static_cast<int>(coeffs.size()) - 2; n >= 0; --n) {
    r *= delta;
    r += coeffs[static_cast<std::size_t>(n)];
  }
  return r;
}

}  // namespace

Jet2::Jet2(int order, Point2 base) : order_(order), base_(base) {
  check_order(order);
}

Jet2 Jet2::constant(double c, int order, Point2 base) {
  Jet2 r(order, base);
  r.c_[0] = c;
  return r;
}

Jet2 Jet2::u_var(int order, Point2 base) {
  Jet2 r = constant(base.u, order, base);
  if (order >= 1) r.c_[index(1, 0)] = 1.0;
  return r;
}

Jet2 Jet2::v_var(int order, Point2 base) {
  Jet2 r = constant(base.v, order, base);
  if (order >= 1) r.c_[index(0, 1)] = 1.0;
  return r;
}

void Jet2::set_coeff(int i, int j, double value) {
  if (i < 0 || j < 0 || i + j > order_) {
    throw Error(ErrorCode::kOrderExceeded,
                "coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                    ") beyond order " + std::to_string(order_));
  }
  c_[index(i, j)] = value;
}

double Jet2::partial(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_) {
    throw Error(ErrorCode::kOrderExceeded,
                "derivative (" + std::to_string(i) + "," + std::to_string(j) +
                    ") beyond order " + std::to_string(order_));
  }
  return c_[index(i, j)] * kTables.fact[i] * kTables.fact[j];
}

double Jet2::max_abs() const noexcept {
  double m = 0.0;
  const std::size_t n = coeff_count(order_);
  for (std::size_t k = 0; k < n; ++k) m = std::max(m, std::abs(c_[k]));
  return m;
}

bool Jet2::is_finite() const noexcept {
  const std::size_t n = coeff_count(order_);
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(c_[k])) return false;
  }
  return true;
}

Jet2 Jet2::truncated(int order) const {
  if (order > order_) {
    throw Error(ErrorCode::kOrderExceeded,
                "cannot raise jet order " + std::to_string(order_) + " to " +
                    std::to_string(order));
  }
  Jet2 r(order, base_);
  std::copy_n(c_.begin(), coeff_count(order), r.c_.begin());
  return r;
}

Jet2 Jet2::d_du() const {
  Jet2 r(std::max(order_ - 1, 0), base_);
  for (int d = 0; d < order_; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      r.c_[index(i, j)] = (i + 1) * c_[index(i + 1, j)];
    }
  }
  return r;
}

Jet2 Jet2::d_dv() const {
  Jet2 r(std::max(order_ - 1, 0), base_);
  for (int d = 0; d < order_; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      r.c_[index(i, j)] = (j + 1) * c_[index(i, j + 1)];
    }
  }
  return r;
}

double Jet2::evaluate(double du, double dv) const noexcept {
  // Horner in v inside Horner in u.
  double total = 0.0;
  for (int i = order_; i >= 0; --i) {
    double row = 0.0;
    for (int j = order_ - i; j >= 0; --j) row = row * dv + c_[index(i, j)];
    total = total * du + row;
  }
  return total;
}

Jet2 Jet2::recentered(Point2 new_base) const {
  const double h = new_base.u - base_.u;
  const double k = new_base.v - base_.v;
  double hp[kN + 1];
  double kp[kN + 1];
  hp[0] = kp[0] = 1.0;
  for (int n = 1; n <= order_; ++n) {
    hp[n] = hp[n - 1] * h;
    kp[n] = kp[n - 1] * k;
  }
  Jet2 r(order_, new_base);
  for (int i = 0; i <= order_; ++i) {
    for (int j = 0; i + j <= order_; ++j) {
      double s = 0.0;
      for (int a = i; a <= order_; ++a) {
        for (int b = j; a + b <= order_; ++b) {
          s += c_[index(a, b)] * kTables.binom[a][i] * kTables.binom[b][j] *
               hp[a - i] * kp[b - j];
        }
      }
      r.c_[index(i, j)] = s;
    }
  }
  return r;
}

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  r *= -1.0;
  return r;
}

void require_compatible(const Jet2& a, const Jet2& b, const char* what) {
  if (a.order() != b.order() || !(a.base() == b.base())) {
    throw Error(ErrorCode::kContractViolation,
                std::string(what) + ": jets differ in order or base (order " +
                    std::to_string(a.order()) + " vs " +
                    std::to_string(b.order()) + ")");
  }
}

Jet2& Jet2::operator+=(const Jet2& o) {
  require_compatible(*this, o, "add");
  const std::size_t n = coeff_count(order_);
  for (std::size_t k = 0; k < n; ++k) c_[k] += o.c_[k];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& o) {
  require_compatible(*this, o, "subtract");
  const std::size_t n = coeff_count(order_);
  for (std::size_t k = 0; k < n; ++k) c_[k] -= o.c_[k];
  return *this;
}

Jet2& Jet2::operator*=(double s) noexcept {
  const std::size_t n = coeff_count(order_);
  for (std::size_t k = 0; k < n; ++k) c_[k] *= s;
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& o) {
  require_compatible(*this, o, "multiply");
  const std::size_t n = coeff_count(order_);
  if (std::all_of(o.c_.begin() + 1, o.c_.begin() + static_cast<std::ptrdiff_t>(n),
                  [](double x) { return x == 0.0; })) {
    return *this *= o.c_[0];
  }
  if (std::all_of(c_.begin() + 1, c_.begin() + static_cast<std::ptrdiff_t>(n),
                  [](double x) { return x == 0.0; })) {
    const double a = c_[0];
    c_ = o.c_;
    return *this *= a;
  }
  std::array<double, kMaxCoeffs> out;
  std::fill_n(out.begin(), n, 0.0);
  for (int d1 = 0; d1 <= order_; ++d1) {
    for (int j1 = 0; j1 <= d1; ++j1) {
      const double a = c_[index(d1 - j1, j1)];
      if (a == 0.0) continue;
      for (int d2 = 0; d1 + d2 <= order_; ++d2) {
        const std::size_t base = index(d1 - j1 + d2, j1);
        const std::size_t ob = index(d2, 0);
        for (int j2 = 0; j2 <= d2; ++j2) {
          out[base + static_cast<std::size_t>(j2)] +=
              a * o.c_[ob + static_cast<std::size_t>(j2)];
        }
      }
    }
  }
  std::copy_n(out.begin(), n, c_.begin());
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& o) {
  *this = divide(*this, o);
  return *this;
}

bool operator==(const Jet2& a, const Jet2& b) noexcept {
  if (a.order_ != b.order_ || !(a.base_ == b.base_)) return false;
  return std::equal(a.c_.begin(), a.c_.begin() + static_cast<std::ptrdiff_t>(
                                                     Jet2::coeff_count(a.order_)),
                    b.c_.begin());
}

Jet2 divide(const Jet2& a, const Jet2& b) {
  require_compatible(a, b, "divide");
  const double b0 = b.value();
  if (!(std::abs(b0) > 1e-300) || std::abs(b0) <= 1e-14 * b.max_abs()) {
    throw Error(ErrorCode::kDivisionByNonUnit,
                "divisor vanishes at the base point");
  }
  const int n = a.order();
  bool constant = true;
  for (int d = 1; d <= n && constant; ++d) {
    for (int j = 0; j <= d; ++j) {
      if (b.coeff(d - j, j) != 0.0) {
        constant = false;
        break;
      }
    }
  }
  if (constant) return a * (1.0 / b0);
  Jet2 q(n, a.base());
  for (int d = 0; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      double s = a.coeff(i, j);
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k == 0 && l == 0) continue;
          s -= b.coeff(k, l) * q.coeff(i - k, j - l);
        }
      }
      q.c_[Jet2::index(i, j)] = s / b0;
    }
  }
  return q;
}

Jet2 operator/(double s, const Jet2& b) {
  return divide(Jet2::constant(s, b.order(), b.base()), b);
}

Jet2 divide_exact_by_v(const Jet2& a) {
  if (a.order() < 1) {
    throw Error(ErrorCode::kOrderExceeded, "exact division needs order >= 1");
  }
  const double tol = 1e-9 * (1.0 + a.max_abs());
  for (int i = 0; i <= a.order(); ++i) {
    if (std::abs(a.coeff(i, 0)) > tol) {
      throw Error(ErrorCode::kNotDivisible,
                  "jet is not divisible by v: coefficient of u^" +
                      std::to_string(i) + " is nonzero");
    }
  }
  Jet2 q(a.order() - 1, a.base());
  for (int i = 0; i < a.order(); ++i) {
    for (int j = 0; i + j < a.order(); ++j) {
      q.set_coeff(i, j, a.coeff(i, j + 1));
    }
  }
  return q;
}

Jet2 divide_exact(const Jet2& a, const Jet2& b) {
  if (!(a.base() == b.base())) {
    throw Error(ErrorCode::kContractViolation, "divide_exact: bases differ");
  }
  const int n = std::min(a.order(), b.order());
  if (n < 1) {
    throw Error(ErrorCode::kOrderExceeded, "exact division needs order >= 1");
  }
  const double bu = b.coeff(1, 0);
  const double bv = b.coeff(0, 1);
  const double bscale = 1.0 + b.max_abs();
  if (std::max(std::abs(bu), std::abs(bv)) <= 1e-14 * bscale) {
    throw Error(ErrorCode::kNotDivisible, "divisor has no linear part");
  }
  double tol = 1e-9 * (1.0 + a.max_abs());
  if (std::abs(a.value()) > tol) {
    throw Error(ErrorCode::kNotDivisible, "dividend does not vanish");
  }
  Jet2 q(n - 1, a.base());
  double qmax = 0.0;
  std::vector<double> r;
  std::vector<double> qd;
  for (int d = 1; d <= n; ++d) {
    // Degree-d residual after the known part of b*q is removed.
    r.assign(static_cast<std::size_t>(d + 1), 0.0);
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      double s = a.coeff(i, j);
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if (k + l < 2) continue;
          s -= b.coeff(k, l) * q.coeff(i - k, j - l);
        }
      }
      r[static_cast<std::size_t>(j)] = s;
    }
    // Synthetic division of r by (bu u + bv v), pivoting on the larger term.
    qd.assign(static_cast<std::size_t>(d), 0.0);
    double remainder;
    if (std::abs(bu) >= std::abs(bv)) {
      for (int j = 0; j < d; ++j) {
        const double prev = j > 0 ? qd[static_cast<std::size_t>(j - 1)] : 0.0;
        qd[static_cast<std::size_t>(j)] =
            (r[static_cast<std::size_t>(j)] - bv * prev) / bu;
      }
      remainder = r[static_cast<std::size_t>(d)] -
                  bv * qd[static_cast<std::size_t>(d - 1)];
    } else {
      for (int j = d; j >= 1; --j) {
        const double next = j < d ? qd[static_cast<std::size_t>(j)] : 0.0;
        qd[static_cast<std::size_t>(j - 1)] =
            (r[static_cast<std::size_t>(j)] - bu * next) / bv;
      }
      remainder = r[0] - bu * qd[0];
    }
    for (int j = 0; j < d; ++j) {
      const double v = qd[static_cast<std::size_t>(j)];
      qmax = std::max(qmax, std::abs(v));
      q.set_coeff(d - 1 - j, j, v);
    }
    tol = 1e-9 * (1.0 + a.max_abs() + b.max_abs() * qmax);
    if (std::abs(remainder) > tol) {
      throw Error(ErrorCode::kNotDivisible,
                  "nonzero remainder in degree " + std::to_string(d));
    }
  }
  return q;
}

Jet2 compose(const Jet2& outer, const Jet2& inner_u, const Jet2& inner_v) {
  require_compatible(inner_u, inner_v, "compose");
  const Point2 ob = outer.base();
  const double tu = 1e-8 * (1.0 + std::abs(ob.u));
  const double tv = 1e-8 * (1.0 + std::abs(ob.v));
  if (std::abs(inner_u.value() - ob.u) > tu ||
      std::abs(inner_v.value() - ob.v) > tv) {
    throw Error(ErrorCode::kContractViolation,
                "compose: inner jets do not map to the outer base point");
  }
  const int n = std::min(outer.order(), inner_u.order());
  const Jet2 du = (inner_u - ob.u).truncated(n);
  const Jet2 dv = (inner_v - ob.v).truncated(n);
  const int m = outer.order();
  const Point2 base = inner_u.base();
  Jet2 total(n, base);
  for (int i = m; i >= 0; --i) {
    Jet2 row = Jet2::constant(outer.coeff(i, m - i), n, base);
    for (int j = m - i - 1; j >= 0; --j) {
      row *= dv;
      row += outer.coeff(i, j);
    }
    total *= du;
    total += row;
  }
  return total;
}

Jet2 pow(const Jet2& a, int exponent) {
  if (exponent < 0) {
    return pow(1.0 / a, -exponent);
  }
  Jet2 result = Jet2::constant(1.0, a.order(), a.base());
  Jet2 base = a;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Jet2 sqrt(const Jet2& a) {
  const double a0 = a.value();
  if (!(a0 > 0.0)) {
    throw Error(ErrorCode::kDomainError, "sqrt of a jet with value <= 0");
  }
  const int n = a.order();
  Jet2 s(n, a.base());
  const double s0 = std::sqrt(a0);
  s.set_coeff(0, 0, s0);
  for (int d = 1; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      double acc = a.coeff(i, j);
      for (int k = 0; k <= i; ++k) {
        for (int l = 0; l <= j; ++l) {
          if ((k == 0 && l == 0) || (k == i && l == j)) continue;
          acc -= s.coeff(k, l) * s.coeff(i - k, j - l);
        }
      }
      s.set_coeff(i, j, acc / (2.0 * s0));
    }
  }
  return s;
}

Jet2 exp(const Jet2& a) {
  const double e0 = std::exp(a.value());
  std::vector<double> c(static_cast<std::size_t>(a.order() + 1));
  for (int k = 0; k <= a.order(); ++k) {
    c[static_cast<std::size_t>(k)] = e0 / kTables.fact[k];
  }
  return univariate_series(c, a - a.value());
}

namespace {

// Taylor coefficients of sin (phase 0) or cos (phase 1) about x0.
Jet2 trig(const Jet2& a, int phase) {
  const double s0 = std::sin(a.value());
  const double c0 = std::cos(a.value());
  const double cycle[4] = {s0, c0, -s0, -c0};
  std::vector<double> c(static_cast<std::size_t>(a.order() + 1));
  for (int k = 0; k <= a.order(); ++k) {
    c[static_cast<std::size_t>(k)] = cycle[(k + phase) % 4] / kTables.fact[k];
  }
  return univariate_series(c, a - a.value());
}

}  // namespace

Jet2 sin(const Jet2& a) { return trig(a, 0); }
Jet2 cos(const Jet2& a) { return trig(a, 1); }

std::ostream& operator<<(std::ostream& os, const Jet2& a) {
  os << "Jet2(order=" << a.order() << ", base=(" << a.base().u << ", "
     << a.base().v << "):";
  bool any = false;
  for (int d = 0; d <= a.order(); ++d) {
    for (int j = 0; j <= d; ++j) {
      const double c = a.coeff(d - j, j);
      if (c == 0.0) continue;
      os << " [" << d - j << "," << j << "]=" << c;
      any = true;
    }
  }
  if (!any) os << " 0";
  return os << ")";
}

double JetVec3::max_abs() const noexcept {
  return std::max({x.max_abs(), y.max_abs(), z.max_abs()});
}

JetVec3 operator+(const JetVec3& a, const JetVec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
JetVec3 operator-(const JetVec3& a, const JetVec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
JetVec3 operator-(const JetVec3& a) { return {-a.x, -a.y, -a.z}; }
JetVec3 operator*(const Jet2& s, const JetVec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}
JetVec3 operator*(double s, const JetVec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}
Jet2 dot(const JetVec3& a, const JetVec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
JetVec3 cross(const JetVec3& a, const JetVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
Jet2 det3(const JetVec3& a, const JetVec3& b, const JetVec3& c) {
  return dot(a, cross(b, c));
}
JetVec3 compose(const JetVec3& outer, const Jet2& inner_u,
                const Jet2& inner_v) {
  return {compose(outer.x, inner_u, inner_v),
          compose(outer.y, inner_u, inner_v),
          compose(outer.z, inner_u, inner_v)};
}
JetVec3 constant_vec(const Vec3& v, int order, Point2 base) {
  return {Jet2::constant(v.x, order, base), Jet2::constant(v.y, order, base),
          Jet2::constant(v.z, order, base)};
}

}  // namespace frontal
