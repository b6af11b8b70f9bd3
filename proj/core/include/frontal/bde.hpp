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

// Binary differential equations p du^2 + 2q du dv + r dv^2 = 0 built from
// fundamental forms: lines of curvature (lc), asymptotic curves (as) and
// characteristic curves (ch); folded-singularity normal forms and their
// classification.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frontal/frontal_analysis.hpp"
#include "frontal/normal_form.hpp"
#include "frontal/surface.hpp"

namespace frontal {

// First form E, F, G and second form against the non-normalized normal nu2.
// K and H are built from (L2, M2, N2) and carry the factors |nu2|^2 and
// |nu2| respectively; they are present where EG - F^2 does not vanish.
struct FundamentalForms {
  Jet2 E, F, G;
  Jet2 L2, M2, N2;
  std::optional<Jet2> K, H;
};

// Needs map jets of order + 2 and normal jets of order `order`.
FundamentalForms fundamental_forms(const Surface& s, Point2 p, int order);

enum class BdeKind { kLc, kAs, kCh, kCustom };
// kPrinted uses (EN - FL) as the lines-of-curvature dv^2 coefficient.
enum class LcVariant { kCorrected, kPrinted };

std::string to_string(BdeKind k);

struct BdeCoeffs {
  Jet2 p, q, r;
};

using BdeField = std::function<BdeCoeffs(Point2 at, int order)>;

struct Bde {
  BdeField field;
  BdeKind kind = BdeKind::kCustom;
  bool reduced = false;
  int max_order = 0;

  BdeCoeffs at(Point2 pt, int order) const;
  // (p, q, r) at pt.
  Vec3 values(Point2 pt) const;
};

Bde build_bde(const Surface& s, BdeKind kind, LcVariant variant = LcVariant::kCorrected);
Bde custom_bde(BdeField field, int max_order = Jet2::kMaxOrder);
// (v + l u^2/2) du^2 + dv^2.
Bde model_bde(double l);

// Divides lc and ch tensors by v on a surface whose singular set is the
// u-axis; as tensors are returned unchanged. Throws kNotDivisible when the
// tensor is not divisible by v at (base.u, 0).
Bde reduce_by_identifier(const Bde& b, const Surface& s);

double discriminant(const Bde& b, Point2 pt);

// Reads A = (p20 - 2 q10^2 - p01 q10) / p01^2 from jets at a folded point
// after dividing by r (p, q: derivatives of p/r, q/r). Flips v when p01 < 0.
// Throws kNotFoldedType unless r != 0, p/r and its u-derivative vanish and
// the v-derivative does not.
double coefficient_A(const BdeCoeffs& c);

struct FoldedReduction {
  double A = 0;          // twice the U^2 coefficient of the reduced p
  Jet2 p;                // reduced p (2-jet), expected V + A U^2/2
  Jet2 q;                // reduced q (2-jet), expected 0
};
// Runs the two explicit coordinate changes that bring a folded BDE to
// (V + A U^2/2 + O(3)) dU^2 + 2 O(3) dU dV + dV^2 and reads A back.
FoldedReduction folded_reduction_pipeline(const BdeCoeffs& c);

enum class FoldedType { kSaddle, kNode, kFocus, kBoundary };
struct FoldedClass {
  FoldedType type = FoldedType::kBoundary;
  double l = 0;
};
std::string to_string(FoldedType t);
FoldedClass classify_folded(double l);

struct SwallowtailFoliations {
  double A_as = 0;          // route 1 on the reduced asymptotic BDE
  double A_ch = 0;          // route 1 on the reduced characteristic BDE
  double l_route2 = 0;      // mu_c tau_s / (4 kappa_nu)
  double ratio_as = 0;      // A_as / l_route2
  double ratio_ch = 0;      // A_ch / l_route2
  double calibrated = 0;    // A_as mu_c tau_s^2 / (4 kappa_nu)
  double lc_discriminant = 0;  // delta of the reduced lc BDE at 0
  FoldedClass as;
  FoldedClass ch;
  std::string sign_report;
};

// Throws kLimitingNormalCurvatureZero when |kappa_nu| <= 1e-9.
SwallowtailFoliations classify_swallowtail_foliations(const Surface& s,
                                                      const Invariants& inv);

// ---- integration -------------------------------------------------------

struct IntegrationOptions {
  double step = 0.01;        // maximum step (arclength in (u, v))
  double max_len = 2.0;      // per direction
  double tol = 1e-7;         // step-doubling error bound
  int max_steps = 200000;
  int threads = 0;           // 0: hardware concurrency
};

enum class StopReason { kLeftWindow, kMaxLength, kStepUnderflow, kNoDirection, kFoldedPoint, kMaxSteps };
std::string to_string(StopReason r);

struct SolutionCurve {
  int seed_index = 0;
  int branch = 0;               // 0 or 1: which root field the seed started on
  std::vector<double> t;        // signed arclength, 0 at the seed
  std::vector<Point2> points;
  StopReason stop_backward = StopReason::kMaxLength;
  StopReason stop_forward = StopReason::kMaxLength;
};

// Root-field directions at pt (unit, empty when delta < 0).
std::vector<Point2> solution_directions(const Bde& b, Point2 pt);

// Integrates both root fields through every seed where delta > 0 (seeds with
// delta < 0 yield no curve). Switches to the lifted field
// (F_theta cos, F_theta sin, -(F_u cos + F_v sin)) on
// {p cos^2 + 2q cos sin + r sin^2 = 0} where delta is below 1e-4 scale^2.
// Output is ordered by seed index, then branch.
std::vector<SolutionCurve> integrate_solutions(const Bde& b, const Rect& window,
                                               const std::vector<Point2>& seeds,
                                               const IntegrationOptions& opts = {});

// Uniform n x n grid restricted to delta > 0, plus points on the positive
// side of each grid edge where delta changes sign.
std::vector<Point2> portrait_seeds(const Bde& b, const Rect& window, int n);

// Power series (in the lifted-field parameter) of the solution through pt
// leaving in direction angle theta0, which must solve the BDE at pt.
CurveSeries solution_series(const Bde& b, Point2 pt, double theta0, int order);

struct CuspCertificate {
  bool ok = false;
  double d1 = 0;     // |gamma_hat'(t0)|
  double d2 = 0;     // |gamma_hat''(t0)|
  double d3 = 0;     // |gamma_hat'''(t0)|
  double cross = 0;  // |gamma_hat'' x gamma_hat'''| / (d2 d3)
  std::string diagnostics;
};

// Checks that the image of a curve series (crossing S(f) at t = 0) has a
// 3/2-cusp: gamma_hat'(0) ~ 0 relative to gamma_hat''(0), and gamma_hat''(0),
// gamma_hat'''(0) independent.
CuspCertificate cusp_certificate(const Surface& s, const CurveSeries& curve);

}  // namespace frontal
