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
#include <sstream>

#include "frontal/error.hpp"
#include "frontal/frontal_analysis.hpp"
#include "frontal/normal_form.hpp"
#include "test_support.hpp"

namespace frontal {
namespace {

using testing::Rng;

Generator gen_of(const std::string& g, const std::string& h, int k = 2) {
  return {testing::field(g), testing::field(h), k};
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInternalInconsistency;
}

void expect_jet_eq(const Jet2& a, const Jet2& b, double tol, const std::string& what) {
  const int n = std::min(a.order(), b.order());
  for (int d = 0; d <= n; ++d) {
    for (int j = 0; j <= d; ++j) {
      EXPECT_NEAR(a.coeff(d - j, j), b.coeff(d - j, j), tol)
          << what << " coefficient u^" << d - j << " v^" << j;
    }
  }
}

TEST(NormalForm, SecondKindContract) {
  Rng rng(41);
  for (int t = 0; t < 20; ++t) {
    const testing::RandomPair p = testing::random_pair(rng, true);
    const Surface s = build_kth_kind(p.gen());
    const JetVec3 f = s.map_jet({0, 0}, 1);
    EXPECT_EQ(f.d_du().value(), (Vec3{1, 0, 0}));
    for (int i = 0; i <= 10; ++i) {
      const double v = -0.3 + 0.06 * i;
      const Point2 q{v * v / 2, v};
      EXPECT_LT(std::abs(identifier_lambda(s, q, 0).value()), 1e-10);
      EXPECT_LT(norm(s.map_jet(q, 1).d_dv().value()), 1e-12);
    }
  }
}

TEST(NormalForm, SwallowtailIffFourthDerivative) {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    const bool swallowtail = t % 2 == 0;
    const testing::RandomPair p = testing::random_pair(rng, true, swallowtail);
    const KindClassification c = classify_point(build_kth_kind(p.gen()), {0, 0});
    EXPECT_EQ(c.kind == PointKind::kKthKind && c.k == 2 && c.is_front, swallowtail)
        << c.describe();
  }
}

TEST(NormalForm, ReportsFrontDeterminantAndPredicates) {
  BuildReport rep;
  build_kth_kind(gen_of("v^3/6 + u", "u^2/2 + v^4/24"), 8, &rep);
  EXPECT_TRUE(rep.is_front);
  EXPECT_NEAR(rep.front_determinant, 1.0, 1e-14);
  ASSERT_FALSE(rep.warnings.empty());
}

TEST(NormalForm, ButterflyFromFormula) {
  // Expanding the third-kind construction by hand for g = v^4/24 gives
  // y = -u v + v^4/24 and for h = u^2/2 + s v^5/120
  // z = (-15 u^2 - 15 s u v^2 + s v^5)/30.
  for (double sign : {1.0, -1.0}) {
    const Surface s = build_kth_kind(
        gen_of("v^4/24", "u^2/2 + " + testing::num(sign) + "*v^5/120", 3));
    const JetVec3 f = s.map_jet({0, 0}, s.order());
    const Surface expect = testing::surface_from_text(
        "x = u\ny = -u*v + v^4/24\nz = (-15*u^2 - 15*" + testing::num(sign) + "*u*v^2 + " +
        testing::num(sign) + "*v^5)/30");
    const JetVec3 e = expect.map_jet({0, 0}, s.order());
    expect_jet_eq(f.x, e.x, 1e-12, "x");
    expect_jet_eq(f.y, e.y, 1e-12, "y");
    expect_jet_eq(f.z, e.z, 1e-12, "z");
  }
}

TEST(NormalForm, ClosedFormFourJetsMatchExtraction) {
  Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const testing::RandomPair p = testing::random_pair(rng, true);
    const Generator g = p.gen();
    const FourJets a = expansion_coefficients(build_kth_kind(g));
    const FourJets b = closed_form_four_jets(extract_coeffs(g));
    expect_jet_eq(a.y, b.y, 1e-10, "y");
    expect_jet_eq(a.z, b.z, 1e-10, "z");
  }
}

TEST(NormalForm, CoefficientTableMatchesDerivatives) {
  Rng rng(44);
  const testing::RandomPair p = testing::random_pair(rng, true);
  const CoeffTable t = extract_coeffs(p.gen());
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; i + j <= 5; ++j) {
      EXPECT_NEAR(t.a[i][j], p.a[i][j], 1e-12);
      EXPECT_NEAR(t.b[i][j], p.b[i][j], 1e-12);
    }
  }
  EXPECT_TRUE(t.predicates.all());
  EXPECT_TRUE(t.failed_predicates().empty());
}

TEST(Invariants, ReferencePair) {
  const Generator g = gen_of("v^3/6", "u^2/2 + v^4/24");
  const Invariants a = invariants_from_coeffs(extract_coeffs(g));
  const Invariants b = invariants_general(build_kth_kind(g));
  EXPECT_NEAR(a.kappa_nu, 1, 1e-14);
  EXPECT_NEAR(a.mu_c, 1, 1e-14);
  EXPECT_NEAR(a.tau_s, 2, 1e-14);
  EXPECT_NEAR(b.kappa_nu, 1, 1e-6);
  EXPECT_NEAR(b.mu_c, 1, 1e-6);
  EXPECT_NEAR(b.tau_s, 2, 1e-6);
  EXPECT_EQ(b.route, Invariants::Route::kGeneral);
}

TEST(Invariants, RoutesAgreeOnRandomNormalForms) {
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    const testing::RandomPair p = testing::random_pair(rng, true);
    const Invariants a = invariants_from_coeffs(extract_coeffs(p.gen()));
    const Invariants b = invariants_general(build_kth_kind(p.gen()));
    EXPECT_NEAR(a.kappa_nu, b.kappa_nu, 1e-6);
    EXPECT_NEAR(a.mu_c, b.mu_c, 1e-6);
    EXPECT_NEAR(a.tau_s, b.tau_s, 1e-6);
    EXPECT_NEAR(a.kappa_nu, -2 * p.b[1][2] + p.b[2][0], 1e-12);
    EXPECT_NEAR(a.mu_c, p.b[0][4] / (p.a[0][3] * p.a[0][3]), 1e-12);
    EXPECT_NEAR(a.tau_s, 2 * p.a[0][3], 1e-12);
  }
}

TEST(Invariants, GeneralRouteIsGeometric) {
  // A rigid motion and a reparametrization fixing the origin leave the
  // invariants unchanged.
  const Generator g = gen_of("v^3/6 + u*v/3", "u^2/2 + v^4/24 - u*v^2/5");
  const Surface s = build_kth_kind(g);
  const Invariants a = invariants_general(s);
  const Surface moved =
      reparametrized(transformed(s, rotation({0.3, -1, 2}, 1.1)),
                     quadratic_chart({0.1, 0.2, 0.0}, {0.0, -0.3, 0.4}, 1.5, 0.2, 0.0, 0.8),
                     {0, 0});
  const Invariants b = invariants_general(moved);
  EXPECT_NEAR(a.kappa_nu, b.kappa_nu, 1e-6);
  EXPECT_NEAR(a.mu_c, b.mu_c, 1e-6);
  EXPECT_NEAR(a.tau_s, b.tau_s, 1e-6);
}

TEST(Invariants, PositionDenominatorDiverges) {
  const Surface s = build_kth_kind(gen_of("v^3/6", "u^2/2 + v^4/24"));
  const LimitResult vel = kappa_nu_limit(s, false);
  const LimitResult pos = kappa_nu_limit(s, true);
  ASSERT_TRUE(vel.finite);
  EXPECT_NEAR(vel.value, 1.0, 1e-8);
  EXPECT_FALSE(pos.finite);
  EXPECT_LT(pos.numerator_order, pos.denominator_order);
}

TEST(NormalForm, Errors) {
  EXPECT_EQ(code_of([] { build_kth_kind(gen_of("u", "u^2")); }), ErrorCode::kNotSecondKind);
  EXPECT_EQ(code_of([] { build_kth_kind(gen_of("v^3", "u", 3)); }), ErrorCode::kNotKthKind);
  EXPECT_EQ(code_of([] { invariants_from_coeffs(extract_coeffs(gen_of("v^3/6 + u", "v^4"))); }),
            ErrorCode::kNotNormalized);
  EXPECT_EQ(code_of([] {
              invariants_general(testing::surface_from_text("x = u\ny = v^2\nz = v^3"));
            }),
            ErrorCode::kWrongKind);
  EXPECT_EQ(code_of([] {
              to_u_axis_form(testing::surface_from_text("x = u\ny = v^2\nz = v^3"));
            }),
            ErrorCode::kWrongInputForm);
}

TEST(NormalForm, UAxisForm) {
  Rng rng(46);
  const testing::RandomPair p = testing::random_pair(rng, true);
  const Surface s = to_u_axis_form(build_kth_kind(p.gen()));
  ASSERT_TRUE(s.normal_form().has_value());
  EXPECT_TRUE(s.normal_form()->u_axis);
  for (double x : {-0.3, -0.1, 0.2}) {
    EXPECT_LT(std::abs(identifier_lambda(s, {x, 0}, 0).value()), 1e-10);
    const JetVec3 f = s.map_jet({x, 0}, 1);
    EXPECT_LT(norm(f.d_du().value() + x * f.d_dv().value()), 1e-12);
  }
  // F(x, y) = -f(-y + x^2/2, x)
  const Surface f = build_kth_kind(p.gen());
  const Point2 q{0.2, -0.1};
  const Vec3 a = s.point(q), b = f.point({-q.v + q.u * q.u / 2, q.u});
  EXPECT_NEAR(a.x, -b.x, 1e-14);
  EXPECT_NEAR(a.y, -b.y, 1e-14);
  EXPECT_NEAR(a.z, -b.z, 1e-14);
}

TEST(NormalForm, SurfaceFileRoundTrip) {
  const Surface s = build_kth_kind(gen_of("v^3/6 + u*v/3", "u^2/2 + v^4/24 - u*v^2/5"));
  std::ostringstream os;
  write_surface_file(os, s, 8, "round trip");
  const std::string text = os.str();
  EXPECT_EQ(text.rfind("# round trip", 0), 0u) << text;
  const Surface r = testing::surface_from_text(text);
  for (Point2 q : {Point2{0.1, 0.2}, Point2{-0.2, 0.05}}) {
    EXPECT_NEAR(norm(r.point(q) + (-1.0) * s.point(q)), 0.0, 1e-13);
  }
  EXPECT_EQ(classify_point(r, {0, 0}).k, 2);
}

}  // namespace
}  // namespace frontal
