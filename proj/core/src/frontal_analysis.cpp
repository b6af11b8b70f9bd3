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

#include "frontal/frontal_analysis.hpp"

#include <algorithm>
#include <cmath>

namespace frontal {
namespace {

constexpr double kFactorials[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320,
                                  362880, 3628800, 39916800, 479001600};

struct LambdaProbe {
  double value;
  double du;
  double dv;
  double grad() const { return std::hypot(du, dv); }
};

LambdaProbe probe(const Surface& s, Point2 q) {
  const Jet2 l = identifier_lambda(s, q, 1);
  return {l.value(), l.coeff(1, 0), l.coeff(0, 1)};
}

// Newton projection onto {lambda = 0} along the gradient.
Point2 project(const Surface& s, Point2 q, double* residual) {
  for (int it = 0; it < 60; ++it) {
    const LambdaProbe lp = probe(s, q);
    *residual = std::abs(lp.value);
    if (lp.grad() < 1e-8) {
      throw Error(ErrorCode::kDegenerateSingularSet,
                  "|d lambda| below 1e-8 near (" + std::to_string(q.u) + ", " +
                      std::to_string(q.v) + ")");
    }
    if (*residual < 1e-12) return q;
    const double g2 = lp.du * lp.du + lp.dv * lp.dv;
    const Point2 next{q.u - lp.value * lp.du / g2, q.v - lp.value * lp.dv / g2};
    const double moved = std::hypot(next.u - q.u, next.v - q.v);
    q = next;
    if (moved < 1e-15 * (1.0 + std::hypot(q.u, q.v))) {
      *residual = std::abs(probe(s, q).value);
      return q;
    }
  }
  return q;
}

Point2 unit_tangent(const LambdaProbe& lp) {
  const double g = lp.grad();
  return {-lp.dv / g, lp.du / g};
}

bool is_zero(double x, double scale) { return std::abs(x) <= 1e-8 * (1.0 + scale); }

int first_nonzero(const std::vector<double>& values) {
  double scale = 0;
  for (double x : values) scale = std::max(scale, std::abs(x));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!is_zero(values[i], scale)) return static_cast<int>(i);
  }
  return -1;
}

std::string ordinal(int k) {
  switch (k) {
    case 1: return "first";
    case 2: return "second";
    case 3: return "third";
    default: return std::to_string(k) + "th";
  }
}

}  // namespace

Jet2 identifier_lambda(const Surface& s, Point2 p, int order) {
  const JetVec3 n2 = s.normal_jet(p, order);
  const JetVec3 f = s.map_jet(p, order + 1);
  return det3(f.d_du(), f.d_dv(), n2);
}

Point2 null_direction(const Surface& s, Point2 p) {
  const JetVec3 f = s.map_jet(p, 1);
  const Vec3 fu{f.x.coeff(1, 0), f.y.coeff(1, 0), f.z.coeff(1, 0)};
  const Vec3 fv{f.x.coeff(0, 1), f.y.coeff(0, 1), f.z.coeff(0, 1)};
  const double e = dot(fu, fu), ff = dot(fu, fv), g = dot(fv, fv);
  const double mean = 0.5 * (e + g);
  const double rad = std::hypot(0.5 * (e - g), ff);
  const double big = mean + rad;
  const double small = std::max(0.0, std::min(mean - rad, (e * g - ff * ff) / big));
  if (big <= 1e-14) {
    throw Error(ErrorCode::kTotallyDegenerate, "df vanishes (rank 0)");
  }
  if (small > 1e-10 * big) {
    throw Error(ErrorCode::kNotSingular, "df has rank 2; the point is regular");
  }
  Point2 k1{ff, small - e};
  Point2 k2{small - g, ff};
  Point2 k = std::hypot(k1.u, k1.v) >= std::hypot(k2.u, k2.v) ? k1 : k2;
  const double n = std::hypot(k.u, k.v);
  k = {k.u / n, k.v / n};
  const double dominant = std::abs(k.u) >= std::abs(k.v) ? k.u : k.v;
  if (dominant < 0) k = {-k.u, -k.v};
  return k;
}

std::pair<Jet2, Jet2> extended_null_field(const Surface& s, Point2 p, int order) {
  const Point2 eta = null_direction(s, p);
  const JetVec3 f = s.map_jet(p, order + 1);
  const JetVec3 fu = f.d_du();
  const JetVec3 fv = f.d_dv();
  const Jet2 one = Jet2::constant(1.0, order, p);
  if (std::abs(eta.v) >= std::abs(eta.u)) {
    return {-divide(dot(fu, fv), dot(fu, fu)), one};
  }
  return {one, -divide(dot(fu, fv), dot(fv, fv))};
}

CurveSeries singular_curve_series(const Surface& s, Point2 p, int order) {
  const Jet2 lam = identifier_lambda(s, p, order);
  const double lu = lam.coeff(1, 0);
  const double lv = lam.coeff(0, 1);
  if (std::hypot(lu, lv) <= 1e-8 * (1.0 + lam.max_abs())) {
    throw Error(ErrorCode::kDegenerateSingularSet,
                "d lambda vanishes; the singular set is not a regular curve");
  }
  const Point2 origin{0, 0};
  const Jet2 t = Jet2::u_var(order, origin);
  const bool v_graph = std::abs(lv) >= std::abs(lu);
  const double slope = v_graph ? lv : lu;
  Jet2 y(order, origin);
  // Chord iteration: each pass fixes one more Taylor coefficient.
  for (int it = 0; it <= order + 1; ++it) {
    const Jet2 cu = v_graph ? p.u + t : p.u + y;
    const Jet2 cv = v_graph ? p.v + y : p.v + t;
    y -= compose(lam, cu, cv) / slope;
  }
  if (v_graph) return {p.u + t, p.v + y};
  return {p.u + y, p.v + t};
}

std::vector<double> phi_derivatives(const Surface& s, Point2 p, int count) {
  const int n = s.order() - 1;
  const CurveSeries g = singular_curve_series(s, p, n);
  const auto [a, b] = extended_null_field(s, p, n);
  const Jet2 ag = compose(a, g.u, g.v).truncated(n - 1);
  const Jet2 bg = compose(b, g.u, g.v).truncated(n - 1);
  const Jet2 phi = g.u.d_du() * bg - g.v.d_du() * ag;
  std::vector<double> out;
  for (int i = 0; i < count && i <= phi.order(); ++i) {
    out.push_back(phi.coeff(i, 0) * kFactorials[i]);
  }
  return out;
}

SingularCurve trace_singular_set(const Surface& s, Point2 seed,
                                 const Rect& window, double step) {
  if (!(step > 0) || !window.valid()) {
    throw Error(ErrorCode::kContractViolation, "trace needs step > 0 and a valid window");
  }
  const LambdaProbe at_seed = probe(s, seed);
  if (at_seed.grad() < 1e-8) {
    if (std::abs(at_seed.value) > 1e-10) {
      throw Error(ErrorCode::kSeedNotSingular, "lambda is nonzero and flat at the seed");
    }
    throw Error(ErrorCode::kDegenerateSingularSet, "|d lambda| below 1e-8 at the seed");
  }
  double residual = 0;
  const Point2 start = project(s, seed, &residual);
  const double diag = std::hypot(window.umax - window.umin, window.vmax - window.vmin);
  const double drift = std::hypot(start.u - seed.u, start.v - seed.v);
  if (residual > 1e-10 || drift > std::max(10 * step, 0.25 * diag)) {
    throw Error(ErrorCode::kSeedNotSingular,
                "seed does not project onto the singular set");
  }

  std::vector<CurveSample> backward;
  std::vector<CurveSample> forward;
  const Point2 t0 = unit_tangent(probe(s, start));
  const std::size_t max_samples = static_cast<std::size_t>(4.0 * diag / step) + 1000;
  for (int dir : {1, -1}) {
    auto& out = dir > 0 ? forward : backward;
    Point2 q = start;
    Point2 tprev{dir * t0.u, dir * t0.v};
    double t = 0;
    while (out.size() < max_samples) {
      const Point2 pred{q.u + step * tprev.u, q.v + step * tprev.v};
      const Point2 next = project(s, pred, &residual);
      if (!window.contains(next)) break;
      if (residual > 1e-10) {
        throw Error(ErrorCode::kDegenerateSingularSet, "corrector failed to converge");
      }
      Point2 tn = unit_tangent(probe(s, next));
      if (tn.u * tprev.u + tn.v * tprev.v < 0) tn = {-tn.u, -tn.v};
      t += dir * std::hypot(next.u - q.u, next.v - q.v);
      out.push_back({t, next, dir > 0 ? tn : Point2{-tn.u, -tn.v}, {}});
      q = next;
      tprev = tn;
    }
  }

  SingularCurve c;
  c.samples.reserve(backward.size() + forward.size() + 1);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) c.samples.push_back(*it);
  if (window.contains(start)) c.samples.push_back({0.0, start, t0, {}});
  for (const auto& smp : forward) c.samples.push_back(smp);
  Point2 prev_eta{0, 0};
  for (auto& smp : c.samples) {
    Point2 e = null_direction(s, smp.p);
    if (prev_eta.u * e.u + prev_eta.v * e.v < 0) e = {-e.u, -e.v};
    smp.eta = e;
    prev_eta = e;
  }
  if (!c.samples.empty()) {
    c.t_min = c.samples.front().t;
    c.t_max = c.samples.back().t;
  }
  return c;
}

std::vector<double> phi_of_t(const SingularCurve& c) {
  std::vector<double> out;
  out.reserve(c.samples.size());
  for (const auto& smp : c.samples) {
    out.push_back(smp.tangent.u * smp.eta.v - smp.tangent.v * smp.eta.u);
  }
  return out;
}

std::string kind_name(int k) {
  switch (k) {
    case 1: return "cuspidal edge";
    case 2: return "swallowtail";
    case 3: return "cuspidal butterfly";
    default: return ordinal(k) + " kind";
  }
}

std::string KindClassification::describe() const {
  switch (kind) {
    case PointKind::kRegular:
      return "regular point";
    case PointKind::kDegenerateSingular:
      return "degenerate singular point";
    case PointKind::kKthKind:
      break;
  }
  std::string name = is_front ? kind_name(k) : ordinal(k) + " kind frontal";
  return "kind=" + std::to_string(k) + " (" + name + "), front=" +
         (is_front ? "yes" : "no");
}

KindClassification classify_point(const Surface& s, Point2 p,
                                  const ClassifyOptions& opts) {
  KindClassification r;
  const int n = s.order() - 1;
  const Jet2 lam = identifier_lambda(s, p, n);
  r.lambda = lam.value();
  r.grad_lambda = {lam.coeff(1, 0), lam.coeff(0, 1)};
  const double grad = std::hypot(r.grad_lambda.u, r.grad_lambda.v);
  if (std::abs(r.lambda) > 1e-9 * (1.0 + grad)) {
    r.kind = PointKind::kRegular;
    return r;
  }
  if (grad <= 1e-8 * (1.0 + lam.max_abs())) {
    r.kind = PointKind::kDegenerateSingular;
    r.is_front = false;
    return r;
  }
  const int cap = s.order() - 2;

  auto [a, b] = extended_null_field(s, p, n);
  if (opts.null_field_scale) {
    const Jet2 rho = (*opts.null_field_scale)(p, n);
    a *= rho;
    b *= rho;
  }
  Jet2 mu = lam;
  for (int i = 1; i <= cap; ++i) {
    const Jet2 mu_u = mu.d_du();
    const Jet2 mu_v = mu.d_dv();
    const int m = mu_u.order();
    mu = a.truncated(m) * mu_u + b.truncated(m) * mu_v;
    r.eta_lambda.push_back(mu.value());
  }
  r.phi_derivs = phi_derivatives(s, p, cap);

  const int i_eta = first_nonzero(r.eta_lambda);
  const int i_phi = first_nonzero(r.phi_derivs);
  r.k_eta = i_eta < 0 ? 0 : i_eta + 1;
  r.k_phi = i_phi < 0 ? 0 : i_phi + 1;
  if (r.k_eta != r.k_phi) {
    throw Error(ErrorCode::kInternalInconsistency,
                "phi-derivative route gives k=" + std::to_string(r.k_phi) +
                    ", eta^k lambda route gives k=" + std::to_string(r.k_eta));
  }
  if (r.k_eta == 0) {
    r.kind = PointKind::kDegenerateSingular;
    r.is_front = false;
    return r;
  }
  r.kind = PointKind::kKthKind;
  r.k = r.k_eta;

  const JetVec3 n2 = s.normal_jet(p, 1);
  const Vec3 nu = n2.value();
  const Vec3 nu_u{n2.x.coeff(1, 0), n2.y.coeff(1, 0), n2.z.coeff(1, 0)};
  const Vec3 nu_v{n2.x.coeff(0, 1), n2.y.coeff(0, 1), n2.z.coeff(0, 1)};
  const Vec3 d_eta = a.value() * nu_u + b.value() * nu_v;
  r.is_front = norm(cross(nu, d_eta)) > 1e-8 * norm(nu) * (norm(nu) + norm(d_eta));
  return r;
}

}  // namespace frontal
