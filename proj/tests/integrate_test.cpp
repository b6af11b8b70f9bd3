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

#include "frontal/bde.hpp"
#include "frontal/error.hpp"
#include "frontal/normal_form.hpp"
#include "test_support.hpp"

namespace frontal {
namespace {

constexpr const char* kSaddle = "x = u\ny = v\nz = u^2 - v^2/2 + u*v^3";
constexpr const char* kBowl = "x = u\ny = v\nz = u^2 + v^2";

std::vector<Point2> grid_seeds(const Rect& w, int n) {
  std::vector<Point2> out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      out.push_back({w.umin + (i + 0.5) * (w.umax - w.umin) / n,
                     w.vmin + (j + 0.5) * (w.vmax - w.vmin) / n});
    }
  }
  return out;
}

// |p du^2 + 2q du dv + r dv^2| / ((|p| + |q| + |r|) |d|^2) at segment midpoints.
double worst_residual(const Bde& b, const SolutionCurve& c) {
  double worst = 0;
  for (std::size_t i = 1; i < c.points.size(); ++i) {
    const Point2 a = c.points[i - 1], e = c.points[i];
    const double du = e.u - a.u, dv = e.v - a.v;
    const double n2 = du * du + dv * dv;
    if (n2 < 1e-16) continue;
    const Vec3 k = b.values({(a.u + e.u) / 2, (a.v + e.v) / 2});
    const double res = std::abs(k.x * du * du + 2 * k.y * du * dv + k.z * dv * dv) /
                       ((std::abs(k.x) + std::abs(k.y) + std::abs(k.z)) * n2);
    worst = std::max(worst, res);
  }
  return worst;
}

TEST(Integrate, CurvesSolveTheBde) {
  const Surface s = testing::surface_from_text(kSaddle);
  const Rect w{-0.4, 0.4, -0.4, 0.4};
  for (BdeKind k : {BdeKind::kAs, BdeKind::kLc}) {
    const Bde b = build_bde(s, k);
    IntegrationOptions opts;
    opts.max_len = 0.5;
    const auto curves = integrate_solutions(b, w, grid_seeds(w, 3), opts);
    ASSERT_EQ(curves.size(), 18u) << to_string(k);
    for (const SolutionCurve& c : curves) {
      ASSERT_GE(c.points.size(), 3u);
      EXPECT_LT(worst_residual(b, c), 1e-3) << to_string(k);
      for (std::size_t i = 1; i < c.t.size(); ++i) EXPECT_GT(c.t[i], c.t[i - 1]);
      for (Point2 p : c.points) {
        EXPECT_TRUE((Rect{w.umin - 0.02, w.umax + 0.02, w.vmin - 0.02, w.vmax + 0.02}).contains(p));
      }
    }
  }
}

TEST(Integrate, SeedAtArclengthZeroAndBranchesOrdered) {
  const Surface s = testing::surface_from_text(kSaddle);
  const Bde b = build_bde(s, BdeKind::kAs);
  const Rect w{-0.3, 0.3, -0.3, 0.3};
  const std::vector<Point2> seeds{{0.05, 0.02}, {-0.1, 0.1}};
  const auto curves = integrate_solutions(b, w, seeds);
  ASSERT_EQ(curves.size(), 4u);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    EXPECT_EQ(curves[i].seed_index, static_cast<int>(i / 2));
    EXPECT_EQ(curves[i].branch, static_cast<int>(i % 2));
    const SolutionCurve& c = curves[i];
    for (std::size_t j = 0; j < c.t.size(); ++j) {
      if (c.t[j] == 0) EXPECT_EQ(c.points[j], seeds[i / 2]);
    }
    EXPECT_EQ(c.stop_forward, StopReason::kLeftWindow);
  }
}

TEST(Integrate, DeterministicAcrossThreadCounts) {
  const Surface s = testing::surface_from_text(kSaddle);
  const Bde b = build_bde(s, BdeKind::kAs);
  const Rect w{-0.4, 0.4, -0.4, 0.4};
  const auto seeds = portrait_seeds(b, w, 4);
  IntegrationOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const auto a = integrate_solutions(b, w, seeds, one);
  const auto c = integrate_solutions(b, w, seeds, four);
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].t, c[i].t);
    EXPECT_EQ(a[i].points, c[i].points);
  }
}

TEST(Integrate, NoCurvesWhereTheDiscriminantIsNegative) {
  const Surface s = testing::surface_from_text(kBowl);
  const Bde b = build_bde(s, BdeKind::kAs);
  const Rect w{-0.5, 0.5, -0.5, 0.5};
  EXPECT_TRUE(portrait_seeds(b, w, 6).empty());
  EXPECT_TRUE(integrate_solutions(b, w, grid_seeds(w, 3)).empty());
  EXPECT_TRUE(solution_directions(b, {0.1, 0.1}).empty());
}

TEST(Integrate, PortraitSeedsHavePositiveDiscriminant) {
  const Bde b = model_bde(0.25);
  const Rect w{-1, 1, -1, 1};
  const auto seeds = portrait_seeds(b, w, 8);
  ASSERT_FALSE(seeds.empty());
  for (Point2 p : seeds) {
    EXPECT_GT(discriminant(b, p), 0);
    EXPECT_TRUE(w.contains(p));
  }
}

TEST(Integrate, CurvesReachTheDiscriminant) {
  // For the model BDE with l = -1 the discriminant is v = u^2/2; solutions
  // meet it and continue on the lifted field.
  const Bde b = model_bde(-1);
  const Rect w{-0.5, 0.5, -0.5, 0.5};
  IntegrationOptions opts;
  opts.max_len = 1.5;
  const auto curves = integrate_solutions(b, w, {{0.2, 0.0}}, opts);
  ASSERT_EQ(curves.size(), 2u);
  double closest = 1;
  for (const SolutionCurve& c : curves) {
    for (Point2 p : c.points) {
      EXPECT_GT(discriminant(b, p), -1e-6);
      closest = std::min(closest, discriminant(b, p));
    }
    EXPECT_LT(worst_residual(b, c), 2e-2);
    EXPECT_EQ(c.stop_forward, StopReason::kLeftWindow);
    EXPECT_EQ(c.stop_backward, StopReason::kLeftWindow);
  }
  EXPECT_LT(closest, 1e-5);
}

TEST(Integrate, SeriesAgreesWithIntegration) {
  const Surface s = testing::surface_from_text(kSaddle);
  const Bde b = build_bde(s, BdeKind::kAs);
  const Point2 p{0.05, 0.1};
  const std::vector<Point2> dirs = solution_directions(b, p);
  ASSERT_EQ(dirs.size(), 2u);
  IntegrationOptions opts;
  opts.max_len = 0.1;
  opts.step = 0.001;
  const auto curves = integrate_solutions(b, {-1, 1, -1, 1}, {p}, opts);
  ASSERT_EQ(curves.size(), 2u);
  for (int br = 0; br < 2; ++br) {
    const Point2 d = dirs[static_cast<std::size_t>(br)];
    const CurveSeries cs = solution_series(b, p, std::atan2(d.v, d.u), 6);
    const SolutionCurve& c = curves[static_cast<std::size_t>(br)];
    for (double t : {-0.02, 0.01, 0.03}) {
      const Point2 q{cs.u.evaluate(t, 0), cs.v.evaluate(t, 0)};
      double best = 1;
      for (std::size_t i = 1; i < c.points.size(); ++i) {
        const Point2 a = c.points[i - 1], e = c.points[i];
        const double du = e.u - a.u, dv = e.v - a.v;
        const double l2 = du * du + dv * dv;
        const double s0 = std::clamp(((q.u - a.u) * du + (q.v - a.v) * dv) / l2, 0.0, 1.0);
        best = std::min(best, std::hypot(q.u - a.u - s0 * du, q.v - a.v - s0 * dv));
      }
      EXPECT_LT(best, 1e-6) << "branch " << br << " t " << t;
    }
  }
}

TEST(CuspCertificate, NullDirectionCrossingIsACusp) {
  const Surface s = testing::surface_from_text("x = u\ny = v^2\nz = v^3");
  CurveSeries c{Jet2::constant(0.1, 4) + 0.0 * Jet2::u_var(4, {0, 0}), Jet2::u_var(4, {0, 0})};
  const CuspCertificate ok = cusp_certificate(s, c);
  EXPECT_TRUE(ok.ok) << ok.diagnostics;
  EXPECT_LT(ok.d1, 1e-12);
  EXPECT_NEAR(ok.d2, 2, 1e-12);
  EXPECT_NEAR(ok.d3, 6, 1e-12);
}

TEST(CuspCertificate, TransverseCrossingIsNot) {
  const Surface s = testing::surface_from_text("x = u\ny = v^2\nz = v^3");
  const Jet2 t = Jet2::u_var(4, {0, 0});
  const CuspCertificate bad = cusp_certificate(s, {0.1 + t, t});
  EXPECT_FALSE(bad.ok);
  EXPECT_NEAR(bad.d1, 1, 1e-12);
  EXPECT_FALSE(bad.diagnostics.empty());
}

TEST(CuspCertificate, LinesOfCurvatureOnTheSwallowtail) {
  // The null direction (1, u) is principal on S(f): one family follows it
  // and images to a cusp, the other crosses with nonzero speed.
  const Generator g{testing::field("v^3/6"), testing::field("u^2/2 + v^4/24"), 2};
  const Surface s = to_u_axis_form(build_kth_kind(g));
  const Bde lc = reduce_by_identifier(build_bde(s, BdeKind::kLc), s);
  for (double u0 : {-0.2, -0.1, 0.1, 0.2}) {
    const Point2 p{u0, 0};
    const std::vector<Point2> dirs = solution_directions(lc, p);
    ASSERT_EQ(dirs.size(), 2u);
    int transverse = 0;
    for (Point2 d : dirs) {
      const CuspCertificate c =
          cusp_certificate(s, solution_series(lc, p, std::atan2(d.v, d.u), 5));
      const double along_eta = std::abs(d.u * u0 - d.v) / std::hypot(d.u, d.v);
      if (c.ok) {
        EXPECT_LT(along_eta, 1e-9) << c.diagnostics;
      } else {
        ++transverse;
        EXPECT_GT(c.d1, 1e-3) << c.diagnostics;
      }
    }
    EXPECT_EQ(transverse, 1);
  }
}

TEST(Integrate, StopReasonNames) {
  EXPECT_EQ(to_string(StopReason::kLeftWindow), "left-window");
  EXPECT_EQ(to_string(StopReason::kFoldedPoint), "folded-point");
}

}  // namespace
}  // namespace frontal
