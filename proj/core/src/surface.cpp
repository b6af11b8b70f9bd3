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

#include "frontal/surface.hpp"

#include <algorithm>
#include <string>

namespace frontal {

Vec3 operator*(const Mat3& m, const Vec3& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Mat3 rotation(const Vec3& axis, double angle) {
  const Vec3 a = (1.0 / norm(axis)) * axis;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double t = 1.0 - c;
  return {Vec3{t * a.x * a.x + c, t * a.x * a.y - s * a.z, t * a.x * a.z + s * a.y},
          Vec3{t * a.x * a.y + s * a.z, t * a.y * a.y + c, t * a.y * a.z - s * a.x},
          Vec3{t * a.x * a.z - s * a.y, t * a.y * a.z + s * a.x, t * a.z * a.z + c}};
}

Surface::Surface(VectorField map, int map_max_order,
                 std::optional<VectorField> normal, int normal_max_order,
                 Point2 base, int order)
    : map_(std::move(map)),
      map_max_order_(map_max_order),
      normal_(std::move(normal)),
      normal_max_order_(normal_ ? normal_max_order : -1),
      base_(base),
      order_(std::min(order, map_max_order)) {}

Surface& Surface::set_order(int order) {
  order_ = std::min(order, map_max_order_);
  return *this;
}

JetVec3 Surface::map_jet(Point2 p, int order) const {
  if (order > map_max_order_) {
    throw Error(ErrorCode::kOrderExceeded,
                "surface map available to order " + std::to_string(map_max_order_) +
                    ", requested " + std::to_string(order));
  }
  return map_(p, order);
}

JetVec3 Surface::normal_jet(Point2 p, int order) const {
  if (!normal_) {
    throw Error(ErrorCode::kNormalRequired,
                "surface has no normal field; supply 'normal = ...'");
  }
  if (order > normal_max_order_) {
    throw Error(ErrorCode::kOrderExceeded,
                "normal field available to order " +
                    std::to_string(normal_max_order_) + ", requested " +
                    std::to_string(order));
  }
  return (*normal_)(p, order);
}

namespace {

JetVec3 divide_all(const JetVec3& c, const Jet2& d, bool exact) {
  if (exact) {
    return {divide_exact(c.x, d), divide_exact(c.y, d), divide_exact(c.z, d)};
  }
  return {divide(c.x, d), divide(c.y, d), divide(c.z, d)};
}

JetVec3 cross_of_partials(const VectorField& map, Point2 p, int order) {
  const JetVec3 f = map(p, order + 1);
  return cross(f.d_du(), f.d_dv());
}

}  // namespace

VectorField synthesize_normal(const VectorField& map, int map_max_order,
                              Point2 ref) {
  if (map_max_order < 3) {
    throw Error(ErrorCode::kNormalRequired, "map jets too short to synthesize a normal");
  }
  const JetVec3 c = cross_of_partials(map, ref, 1);
  const Vec3 c0 = c.value();
  const Vec3 cu{c.x.coeff(1, 0), c.y.coeff(1, 0), c.z.coeff(1, 0)};
  const Vec3 cv{c.x.coeff(0, 1), c.y.coeff(0, 1), c.z.coeff(0, 1)};
  const JetVec3 f1 = map(ref, 1);
  const double fscale =
      std::max(1.0, f1.max_abs() * f1.max_abs());
  Vec3 w;
  if (norm(c0) > 1e-10 * fscale) {
    w = c0;
  } else if (std::max(norm(cu), norm(cv)) > 1e-10 * fscale) {
    w = norm(cu) >= norm(cv) ? cu : cv;
  } else {
    throw Error(ErrorCode::kNormalRequired,
                "f_u x f_v vanishes to second order; cannot synthesize a normal");
  }
  w = (1.0 / norm(w)) * w;

  return [map, map_max_order, w](Point2 p, int order) -> JetVec3 {
    const int work = std::min(order, map_max_order - 2);
    if (work < order) {
      throw Error(ErrorCode::kOrderExceeded, "synthesized normal order too high");
    }
    const JetVec3 c = cross_of_partials(map, p, order + 1);
    const Jet2 d = dot(c, constant_vec(w, c.order(), p));
    const double d0 = std::abs(d.value());
    const double grad = std::hypot(d.coeff(1, 0), d.coeff(0, 1));
    const double scale = 1.0 + c.max_abs();
    if (grad <= 1e-12 * scale || d0 >= 0.1 * grad) {
      return divide_all(c, d, false).truncated(order);
    }
    if (d0 <= 1e-11 * scale) {
      return divide_all(c, d, true).truncated(order);
    }
    // Project onto {d = 0} along the gradient, divide exactly there with
    // spare orders, then shift back to p.
    Point2 q = p;
    Jet2 dq = d;
    for (int it = 0; it < 20; ++it) {
      const double gu = dq.coeff(1, 0);
      const double gv = dq.coeff(0, 1);
      const double g2 = gu * gu + gv * gv;
      if (g2 == 0.0) break;
      q = {q.u - dq.value() * gu / g2, q.v - dq.value() * gv / g2};
      const JetVec3 cq = cross_of_partials(map, q, 1);
      dq = dot(cq, constant_vec(w, 1, q));
      if (std::abs(dq.value()) <= 1e-14 * scale) break;
    }
    if (norm(cross_of_partials(map, q, 0).value()) > 1e-8 * scale) {
      // Regular crossing of {d = 0}: c/d blows up there, so normalize
      // against c(p) instead, keeping the orientation of c/d.
      const Vec3 c0 = c.value();
      const double sign = d.value() < 0 ? -1.0 : 1.0;
      const Jet2 dn = dot(c, constant_vec((sign / norm(c0)) * c0, c.order(), p));
      return divide_all(c, dn, false).truncated(order);
    }
    const int high = std::min(order + 5, map_max_order - 1);
    const JetVec3 ch = cross_of_partials(map, q, high);
    const Jet2 dh = dot(ch, constant_vec(w, high, q));
    JetVec3 nq = divide_all(ch, dh, true);
    if (nq.order() < order) {
      throw Error(ErrorCode::kOrderExceeded, "synthesized normal order too high");
    }
    return nq.recentered(p).truncated(order);
  };
}

Surface reparametrized(const Surface& s, ChartMap phi, Point2 new_base,
                       int phi_max_order) {
  VectorField map = [map = s.map_field(), phi](Point2 p, int order) {
    auto [a, b] = phi(p, order);
    const Point2 q{a.value(), b.value()};
    return compose(map(q, order), a, b);
  };
  std::optional<VectorField> normal;
  if (s.normal_field()) {
    normal = [nf = *s.normal_field(), phi](Point2 p, int order) {
      auto [a, b] = phi(p, order);
      const Point2 q{a.value(), b.value()};
      return compose(nf(q, order), a, b);
    };
  }
  Surface out(map, std::min(s.map_max_order(), phi_max_order), normal,
              std::min(s.normal_max_order(), phi_max_order), new_base, s.order());
  return out;
}

Surface transformed(const Surface& s, const Mat3& r, double scale) {
  auto apply = [r](const JetVec3& f, double k) {
    auto row = [&](const Vec3& m) { return k * (m.x * f.x + m.y * f.y + m.z * f.z); };
    return JetVec3{row(r[0]), row(r[1]), row(r[2])};
  };
  VectorField map = [map = s.map_field(), apply, scale](Point2 p, int order) {
    return apply(map(p, order), scale);
  };
  std::optional<VectorField> normal;
  if (s.normal_field()) {
    normal = [nf = *s.normal_field(), apply](Point2 p, int order) {
      return apply(nf(p, order), 1.0);
    };
  }
  Surface out(map, s.map_max_order(), normal, s.normal_max_order(), s.base(),
              s.order());
  if (s.normal_form()) out.set_normal_form(*s.normal_form());
  return out;
}

Surface with_scaled_normal(const Surface& s, double c) {
  std::optional<VectorField> normal;
  if (s.normal_field()) {
    normal = [nf = *s.normal_field(), c](Point2 p, int order) {
      return c * nf(p, order);
    };
  }
  Surface out(s.map_field(), s.map_max_order(), normal, s.normal_max_order(),
              s.base(), s.order());
  if (s.normal_form()) out.set_normal_form(*s.normal_form());
  return out;
}

ChartMap quadratic_chart(const std::array<double, 3>& qu,
                         const std::array<double, 3>& qv, double a11,
                         double a12, double a21, double a22) {
  return [=](Point2 p, int order) {
    const Jet2 x = Jet2::u_var(order, p);
    const Jet2 y = Jet2::v_var(order, p);
    Jet2 a = a11 * x + a12 * y + qu[0] * x * x + qu[1] * x * y + qu[2] * y * y;
    Jet2 b = a21 * x + a22 * y + qv[0] * x * x + qv[1] * x * y + qv[2] * y * y;
    return std::pair<Jet2, Jet2>{a, b};
  };
}

}  // namespace frontal
