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
#include "frontal/jet.hpp"
#include "test_support.hpp"

namespace frontal {
namespace {

using testing::Rng;

Jet2 random_jet(Rng& rng, int order, Point2 base, double c0 = 0.0) {
  Jet2 a(order, base);
  for (int d = 0; d <= order; ++d) {
    for (int j = 0; j <= d; ++j) a.set_coeff(d - j, j, rng.uniform(-1, 1));
  }
  a.set_coeff(0, 0, a.value() + c0);
  return a;
}

void expect_near(const Jet2& a, const Jet2& b, double tol) {
  ASSERT_EQ(a.order(), b.order());
  for (int d = 0; d <= a.order(); ++d) {
    for (int j = 0; j <= d; ++j) {
      EXPECT_NEAR(a.coeff(d - j, j), b.coeff(d - j, j), tol) << "coefficient (" << d - j << ", " << j << ")";
    }
  }
}

TEST(Jet2, VariablesAndConstants) {
  const Point2 p{0.5, -2};
  const Jet2 u = Jet2::u_var(4, p);
  EXPECT_EQ(u.value(), 0.5);
  EXPECT_EQ(u.coeff(1, 0), 1.0);
  EXPECT_EQ(u.coeff(0, 1), 0.0);
  EXPECT_EQ(Jet2::v_var(4, p).value(), -2.0);
  EXPECT_EQ(Jet2::constant(3, 2).max_abs(), 3.0);
  EXPECT_EQ(Jet2::coeff_count(8), 45u);
}

TEST(Jet2, OrderLimitsAreEnforced) {
  EXPECT_THROW(Jet2(13, {}), Error);
  Jet2 a(3, {});
  EXPECT_THROW(a.set_coeff(3, 1, 1.0), Error);
  EXPECT_THROW(a.truncated(4), Error);
  try {
    a.truncated(5);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderExceeded);
  }
}

TEST(Jet2, MixedBasesOrOrdersAreRejected) {
  const Jet2 a = Jet2::u_var(3, {0, 0});
  const Jet2 b = Jet2::u_var(3, {1, 0});
  const Jet2 c = Jet2::u_var(4, {0, 0});
  EXPECT_THROW(a + b, Error);
  EXPECT_THROW(a * c, Error);
}

TEST(Jet2, PolynomialProductMatchesPartials) {
  // f = (u + 2v)^3 at (1, 1): partials from the binomial expansion.
  const Point2 p{1, 1};
  const Jet2 f = pow(Jet2::u_var(5, p) + 2.0 * Jet2::v_var(5, p), 3);
  EXPECT_DOUBLE_EQ(f.value(), 27.0);
  EXPECT_DOUBLE_EQ(f.partial(1, 0), 27.0);   // 3 (u+2v)^2
  EXPECT_DOUBLE_EQ(f.partial(0, 1), 54.0);
  EXPECT_DOUBLE_EQ(f.partial(1, 1), 36.0);   // 12 (u+2v)
  EXPECT_DOUBLE_EQ(f.partial(0, 3), 48.0);
  EXPECT_DOUBLE_EQ(f.partial(3, 1), 0.0);
}

TEST(Jet2, ElementaryFunctionsMatchFiniteDifferences) {
  const Point2 p{0.3, -0.4};
  const Jet2 u = Jet2::u_var(6, p);
  const Jet2 v = Jet2::v_var(6, p);
  const Jet2 f = exp(u * v) + sin(u - v) * cos(2.0 * v) + sqrt(2.0 + u * u);
  auto fv = [](double a, double b) {
    return std::exp(a * b) + std::sin(a - b) * std::cos(2 * b) + std::sqrt(2 + a * a);
  };
  EXPECT_NEAR(f.value(), fv(p.u, p.v), 1e-14);
  EXPECT_NEAR(f.partial(1, 0), testing::fd_du(fv, p.u, p.v), 1e-8);
  EXPECT_NEAR(f.partial(0, 1), testing::fd_dv(fv, p.u, p.v), 1e-8);
  auto fu = [&](double a, double b) { return testing::fd_du(fv, a, b, 1e-4); };
  EXPECT_NEAR(f.partial(1, 1), testing::fd_dv(fu, p.u, p.v, 1e-4), 1e-5);
}

TEST(Jet2, EvaluateReproducesTaylorPolynomial) {
  const Point2 p{0.1, 0.2};
  const Jet2 f = exp(Jet2::u_var(12, p) + 0.5 * Jet2::v_var(12, p));
  const double du = 0.05, dv = -0.03;
  EXPECT_NEAR(f.evaluate(du, dv), std::exp(p.u + du + 0.5 * (p.v + dv)), 1e-15);
}

TEST(Jet2, RecenteringAgreesWithDirectExpansionOfPolynomials) {
  Rng rng(11);
  const Jet2 a = random_jet(rng, 5, {0, 0});
  const Point2 q{0.2, -0.3};
  const Jet2 r = a.recentered(q);
  EXPECT_EQ(r.base(), q);
  // A polynomial of degree 5 is reproduced exactly by its recentered 5-jet.
  for (double du : {-0.1, 0.0, 0.15}) {
    for (double dv : {-0.2, 0.05}) {
      EXPECT_NEAR(r.evaluate(du, dv), a.evaluate(q.u + du, q.v + dv), 1e-13);
    }
  }
}

TEST(Jet2, DivisionInvertsMultiplication) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const Point2 p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Jet2 a = random_jet(rng, 8, p);
    const Jet2 b = random_jet(rng, 8, p, 3.0);
    expect_near((a * b) / b, a, 1e-11);
    expect_near(b * (1.0 / b), Jet2::constant(1.0, 8, p), 1e-12);
  }
}

TEST(Jet2, DivisionByNonUnitThrows) {
  const Jet2 v = Jet2::v_var(4, {0, 0});
  try {
    (void)(Jet2::constant(1, 4) / v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByNonUnit);
  }
}

TEST(Jet2, ExactDivisionByV) {
  Rng rng(3);
  const Jet2 q = random_jet(rng, 6, {0.4, 0});
  const Jet2 v = Jet2::v_var(7, {0.4, 0});
  Jet2 q7(7, {0.4, 0});
  for (int d = 0; d <= 6; ++d) {
    for (int j = 0; j <= d; ++j) q7.set_coeff(d - j, j, q.coeff(d - j, j));
  }
  const Jet2 back = divide_exact_by_v(q7 * v);
  expect_near(back, q, 1e-14);
  try {
    divide_exact_by_v(q7 * v + Jet2::u_var(7, {0.4, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDivisible);
  }
}

TEST(Jet2, ExactDivisionByLinearForm) {
  Rng rng(5);
  const Point2 o{0, 0};
  const Jet2 l = 2.0 * Jet2::u_var(7, o) - 3.0 * Jet2::v_var(7, o) +
                 Jet2::u_var(7, o) * Jet2::v_var(7, o);
  const Jet2 q = random_jet(rng, 7, o);
  const Jet2 back = divide_exact(q * l, l);
  expect_near(back, q.truncated(6), 1e-11);
}

TEST(Jet2, ComposeWithIdentityIsIdentity) {
  Rng rng(9);
  const Point2 p{0.3, 0.7};
  const Jet2 a = random_jet(rng, 6, p);
  const Jet2 c = compose(a, Jet2::u_var(6, p), Jet2::v_var(6, p));
  expect_near(c, a, 1e-14);
}

TEST(Jet2, ComposeIsChainRule) {
  // f(x, y) = x^2 y with x = u + v^2, y = exp(u).
  const Point2 p{0.2, 0.5};
  const Jet2 u = Jet2::u_var(5, p), v = Jet2::v_var(5, p);
  const Jet2 x = u + v * v, y = exp(u);
  const Point2 q{x.value(), y.value()};
  const Jet2 X = Jet2::u_var(5, q), Y = Jet2::v_var(5, q);
  const Jet2 direct = x * x * y;
  expect_near(compose(X * X * Y, x, y), direct, 1e-12);
  EXPECT_THROW(compose(X * X * Y, u, v), Error);
}

TEST(Jet2, DerivativeDropsOneOrder) {
  const Point2 p{0.1, 0.1};
  const Jet2 f = sin(Jet2::u_var(6, p)) * Jet2::v_var(6, p);
  const Jet2 fu = f.d_du();
  EXPECT_EQ(fu.order(), 5);
  EXPECT_NEAR(fu.value(), std::cos(0.1) * 0.1, 1e-15);
  EXPECT_NEAR(f.d_dv().value(), std::sin(0.1), 1e-15);
}

TEST(Jet2, SqrtOfNonPositiveThrowsDomainError) {
  try {
    sqrt(Jet2::u_var(3, {0, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
}

// Leibniz rule for random jets.
TEST(Jet2Property, ProductRule) {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    const Point2 p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Jet2 a = random_jet(rng, 7, p), b = random_jet(rng, 7, p);
    expect_near((a * b).d_du(), a.d_du() * b.truncated(6) + a.truncated(6) * b.d_du(), 1e-12);
    expect_near((a * b).d_dv(), a.d_dv() * b.truncated(6) + a.truncated(6) * b.d_dv(), 1e-12);
  }
}

TEST(Jet2Property, TruncationCommutesWithArithmetic) {
  Rng rng(22);
  for (int t = 0; t < 10; ++t) {
    const Point2 p{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const Jet2 a = random_jet(rng, 9, p), b = random_jet(rng, 9, p, 2.5);
    expect_near((a * b).truncated(4), a.truncated(4) * b.truncated(4), 1e-12);
    expect_near((a / b).truncated(4), a.truncated(4) / b.truncated(4), 1e-12);
  }
}

TEST(JetVec3, CrossAndDot) {
  const Point2 p{0, 0};
  const Jet2 u = Jet2::u_var(3, p), v = Jet2::v_var(3, p);
  const JetVec3 a{u, v, u * v};
  const JetVec3 b{Jet2::constant(1, 3), u, v};
  const Jet2 d = dot(a, cross(a, b));
  EXPECT_LT(d.max_abs(), 1e-15);
  EXPECT_NEAR(det3(a, b, cross(a, b)).value(), dot(cross(a, b), cross(a, b)).value(), 1e-15);
}

}  // namespace
}  // namespace frontal
