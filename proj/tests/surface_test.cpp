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


#include <gtest/gtest.h>

#include <cmath>

#include "frontal/error.hpp"
#include "frontal/frontal_analysis.hpp"
#include "frontal/surface.hpp"
#include "test_support.hpp"

namespace frontal {
namespace {

using testing::Rng;

constexpr const char* kSwallowtail = "x = u\ny = 4*v^3 + 2*u*v\nz = 3*v^4 + u*v^2";

void expect_normal_is_normal(const Surface& s, Point2 p) {
  const JetVec3 f = s.map_jet(p, 1);
  const Vec3 fu = f.d_du().value();
  const Vec3 fv = f.d_dv().value();
  const Vec3 n = s.normal_jet(p, 0).value();
  const double nn = std::sqrt(dot(n, n));
  ASSERT_GT(nn, 1e-8);
  EXPECT_NEAR(dot(fu, n) / nn, 0.0, 1e-10 * (1 + norm(fu)));
  EXPECT_NEAR(dot(fv, n) / nn, 0.0, 1e-10 * (1 + norm(fv)));
}

TEST(Surface, SynthesizedNormalIsPerpendicularOnAndOffTheSingularSet) {
  const Surface s = testing::surface_from_text(kSwallowtail);
  ASSERT_TRUE(s.has_normal());
  for (Point2 p : {Point2{0, 0}, Point2{-0.06, 0.1}, Point2{0.3, -0.2}, Point2{-0.5, 0.4}}) {
    expect_normal_is_normal(s, p);
  }
}

TEST(Surface, SynthesizedNormalIsSmoothAcrossTheSingularSet) {
  // The singular set is u = -6 v^2; the normal must not flip across it.
  const Surface s = testing::surface_from_text(kSwallowtail);
  const Vec3 a = s.normal_jet({-0.06 - 1e-3, 0.1}, 0).value();
  const Vec3 b = s.normal_jet({-0.06 + 1e-3, 0.1}, 0).value();
  EXPECT_GT(dot(a, b) / (norm(a) * norm(b)), 0.99);
}

TEST(Surface, SynthesizedNormalAwayFromTheReferenceChart) {
  // Far from the base point the reference direction becomes tangent to
  // this regular surface.
  const Surface s = testing::surface_from_text("x = u*cos(v)\ny = u*sin(v)\nz = u^2/2 + v/3");
  for (double u : {-0.9, -0.72, -0.6}) {
    for (double v = -1.2; v <= 0.0; v += 0.05) expect_normal_is_normal(s, {u, v});
  }
}

TEST(Surface, ExplicitNormalIsUsed) {
  const Surface s =
      testing::surface_from_text("x = u\ny = v^2\nz = v^3\nnormal = 0, -3*v, 2");
  const Vec3 n = s.normal_jet({0.2, 0.5}, 0).value();
  EXPECT_DOUBLE_EQ(n.y, -1.5);
  EXPECT_DOUBLE_EQ(n.z, 2.0);
}

TEST(Surface, NormalRequiredWithoutNormalField) {
  const Surface s({[](Point2 p, int o) {
                     return JetVec3{Jet2::u_var(o, p), Jet2::v_var(o, p), Jet2::constant(0, o, p)};
                   }},
                  12, std::nullopt, 0, {0, 0}, 6);
  try {
    s.normal_jet({0, 0}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNormalRequired);
  }
}

TEST(Surface, ReparametrizationComposesJets) {
  const Surface s = testing::surface_from_text(kSwallowtail);
  const ChartMap phi = quadratic_chart({0.0, 0.3, -0.2}, {0.1, 0.0, 0.5}, 1.0, 0.5, -0.25, 2.0);
  const Surface r = reparametrized(s, phi, {0, 0});
  for (Point2 q : {Point2{0.1, -0.2}, Point2{-0.3, 0.05}}) {
    const auto [a, b] = phi(q, 0);
    const Vec3 lhs = r.point(q);
    const Vec3 rhs = s.point({a.value(), b.value()});
    EXPECT_NEAR(lhs.x, rhs.x, 1e-13);
    EXPECT_NEAR(lhs.y, rhs.y, 1e-13);
    EXPECT_NEAR(lhs.z, rhs.z, 1e-13);
    expect_normal_is_normal(r, q);
  }
}

TEST(Surface, RigidMotionAndScaling) {
  const Surface s = testing::surface_from_text(kSwallowtail);
  const Mat3 rot = rotation({1, 2, 3}, 0.7);
  const Surface t = transformed(s, rot, 2.5);
  const Point2 p{0.2, -0.1};
  const Vec3 x = rot * s.point(p);
  EXPECT_NEAR(t.point(p).x, 2.5 * x.x, 1e-13);
  EXPECT_NEAR(t.point(p).y, 2.5 * x.y, 1e-13);
  EXPECT_NEAR(t.point(p).z, 2.5 * x.z, 1e-13);
  expect_normal_is_normal(t, p);
  const Vec3 m = rot * Vec3{1, 0, 0};
  EXPECT_NEAR(norm(m), 1.0, 1e-14);
}

TEST(Surface, ScaledNormal) {
  const Surface s = testing::surface_from_text(kSwallowtail);
  const Surface t = with_scaled_normal(s, -3);
  const Vec3 a = s.normal_jet({0.1, 0.1}, 0).value();
  const Vec3 b = t.normal_jet({0.1, 0.1}, 0).value();
  EXPECT_NEAR(b.x, -3 * a.x, 1e-14);
  EXPECT_NEAR(b.z, -3 * a.z, 1e-14);
}

TEST(Surface, OrderBounds) {
  Surface s = testing::surface_from_text(kSwallowtail);
  s.set_order(13);
  EXPECT_EQ(s.order(), s.map_max_order());
  s.set_order(4);
  EXPECT_EQ(s.order(), 4);
}

}  // namespace
}  // namespace frontal
