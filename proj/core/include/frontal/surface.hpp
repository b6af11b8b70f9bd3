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

// A surface germ (u, v) -> R^3 evaluated through jets at arbitrary points,
// with an optional non-normalized normal field nu2.

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <utility>

#include "frontal/expr.hpp"
#include "frontal/jet.hpp"

namespace frontal {

using ScalarField = std::function<Jet2(Point2 p, int order)>;
using VectorField = std::function<JetVec3(Point2 p, int order)>;
// Coordinate change (x, y) -> (U(x, y), V(x, y)) as a pair of jets at p.
using ChartMap = std::function<std::pair<Jet2, Jet2>(Point2 p, int order)>;

using Mat3 = std::array<Vec3, 3>;  // rows
Vec3 operator*(const Mat3& m, const Vec3& v);
Mat3 rotation(const Vec3& axis, double angle);

// Provenance of a surface built from a generator pair.
struct NormalFormInfo {
  int k = 2;
  bool u_axis = false;
  ScalarField g;
  ScalarField h;
};

class Surface {
 public:
  // map_max_order / normal_max_order bound the jet orders the closures can
  // deliver; order() is the working order used by analyses.
  Surface(VectorField map, int map_max_order, std::optional<VectorField> normal,
          int normal_max_order, Point2 base, int order);

  Point2 base() const noexcept { return base_; }
  int order() const noexcept { return order_; }
  int map_max_order() const noexcept { return map_max_order_; }
  int normal_max_order() const noexcept { return normal_max_order_; }
  bool has_normal() const noexcept { return normal_.has_value(); }

  JetVec3 map_jet(Point2 p, int order) const;
  JetVec3 map_jet(Point2 p) const { return map_jet(p, order_); }
  Vec3 point(Point2 p) const { return map_jet(p, 0).value(); }
  // Throws kNormalRequired when the surface has no normal field.
  JetVec3 normal_jet(Point2 p, int order) const;

  const std::optional<NormalFormInfo>& normal_form() const noexcept {
    return normal_form_;
  }
  Surface& set_normal_form(NormalFormInfo info) {
    normal_form_ = std::move(info);
    return *this;
  }
  Surface& set_base(Point2 p) {
    base_ = p;
    return *this;
  }
  Surface& set_order(int order);

  const VectorField& map_field() const noexcept { return map_; }
  const std::optional<VectorField>& normal_field() const noexcept { return normal_; }

 private:
  VectorField map_;
  int map_max_order_;
  std::optional<VectorField> normal_;
  int normal_max_order_;
  Point2 base_;
  int order_;
  std::optional<NormalFormInfo> normal_form_;
};

ScalarField field_from_expr(ExprPtr e);

// nu2 = (f_u x f_v) / <f_u x f_v, w> for a reference direction w fixed at
// ref. On the singular set the quotient is taken by exact division, near it
// by exact division at the projected point followed by recentering.
// Throws kNormalRequired when f_u x f_v vanishes to second order at ref.
VectorField synthesize_normal(const VectorField& map, int map_max_order, Point2 ref);

// Builds a Surface from a parsed file; without a normal key the normal is
// synthesized.
Surface surface_from_def(const SurfaceDef& def);

// F = f o phi with normal nu2 o phi. new_base is the base of F.
Surface reparametrized(const Surface& s, ChartMap phi, Point2 new_base,
                       int phi_max_order = Jet2::kMaxOrder);
// F = scale * R f; normal R nu2.
Surface transformed(const Surface& s, const Mat3& r, double scale = 1.0);
// Same map with nu2 replaced by c * nu2.
Surface with_scaled_normal(const Surface& s, double c);

// Identity-plus-quadratic chart (u, v) -> (u, v) + Q(u, v) used by
// reparametrization tests; coefficients are {uu, uv, vv} for each output.
ChartMap quadratic_chart(const std::array<double, 3>& qu,
                         const std::array<double, 3>& qv, double a11 = 1,
                         double a12 = 0, double a21 = 0, double a22 = 1);

}  // namespace frontal
