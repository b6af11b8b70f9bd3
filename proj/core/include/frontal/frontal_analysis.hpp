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

// Singular sets, null directions and k-th-kind classification of frontals.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frontal/surface.hpp"

namespace frontal {

struct Rect {
  double umin = -1, umax = 1, vmin = -1, vmax = 1;

  bool contains(Point2 p) const noexcept {
    return p.u >= umin && p.u <= umax && p.v >= vmin && p.v <= vmax;
  }
  bool valid() const noexcept { return umax > umin && vmax > vmin; }
};

// lambda = det(f_u, f_v, nu2) as a jet of the given order at p.
Jet2 identifier_lambda(const Surface& s, Point2 p, int order);
inline Jet2 identifier_lambda(const Surface& s, Point2 p) {
  return identifier_lambda(s, p, s.order() - 1);
}

struct CurveSample {
  double t = 0;
  Point2 p;
  Point2 tangent;  // unit
  Point2 eta;      // unit null direction
};

struct SingularCurve {
  std::vector<CurveSample> samples;
  double t_min = 0;
  double t_max = 0;
};

// Predictor-corrector continuation of {lambda = 0} through seed, in both
// directions, until the curve leaves window. t is arclength with t = 0 at
// the projected seed.
SingularCurve trace_singular_set(const Surface& s, Point2 seed, const Rect& window,
                                 double step);

// Unit kernel direction of df_p; the larger component is made positive.
Point2 null_direction(const Surface& s, Point2 p);

// Smooth null vector field (a, b) near a singular point p: the kernel of the
// Gram matrix with the dominant component of eta(p) fixed to 1.
std::pair<Jet2, Jet2> extended_null_field(const Surface& s, Point2 p, int order);

// Singular curve through p as power series in t (Jet2 in the u slot): a graph
// over whichever coordinate lambda's gradient allows.
struct CurveSeries {
  Jet2 u;
  Jet2 v;
};
CurveSeries singular_curve_series(const Surface& s, Point2 p, int order);

// phi(t) = det(gamma'(t), eta(t)) at every sample of the traced curve.
std::vector<double> phi_of_t(const SingularCurve& c);
// Derivatives phi^(i)(0), i = 0..count-1, along the graph parametrization
// through p with the extended null field.
std::vector<double> phi_derivatives(const Surface& s, Point2 p, int count);

enum class PointKind { kRegular, kKthKind, kDegenerateSingular };

struct KindClassification {
  PointKind kind = PointKind::kRegular;
  int k = 0;
  bool is_front = true;
  double lambda = 0;
  Point2 grad_lambda;
  std::vector<double> phi_derivs;   // phi^(i)(0)
  std::vector<double> eta_lambda;   // (eta^i lambda)(p), i >= 1
  int k_phi = 0;
  int k_eta = 0;

  std::string describe() const;
};

struct ClassifyOptions {
  // Multiplies the extended null field before iterating eta^i lambda.
  std::optional<ScalarField> null_field_scale;
};

KindClassification classify_point(const Surface& s, Point2 p,
                                  const ClassifyOptions& opts = {});

// Name of a front singularity of the k-th kind ("cuspidal edge", ...).
std::string kind_name(int k);

}  // namespace frontal
