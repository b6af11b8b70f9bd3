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

#include "frontal/bde.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "frontal/error.hpp"

namespace frontal {
namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Same coefficients, base moved to the origin.
Jet2 at_origin(const Jet2& a) {
  Jet2 out(a.order(), {0, 0});
  for (int d = 0; d <= a.order(); ++d) {
    for (int j = 0; j <= d; ++j) out.set_coeff(d - j, j, a.coeff(d - j, j));
  }
  return out;
}

// Pull back (P, Q, R) along (u, v) = (x(U, V), y(U, V)) and divide by the
// new R.
struct Tensor {
  Jet2 p, q, r;
};

Tensor pull_back(const Tensor& t, const Jet2& x, const Jet2& y) {
  const Jet2 P = compose(t.p, x, y);
  const Jet2 Q = compose(t.q, x, y);
  const Jet2 R = compose(t.r, x, y);
  const Jet2 xu = x.d_du();
  const Jet2 xv = x.d_dv();
  const Jet2 yu = y.d_du();
  const Jet2 yv = y.d_dv();
  const int n = xu.order();
  const Jet2 Pn = P.truncated(n), Qn = Q.truncated(n), Rn = R.truncated(n);
  Tensor out{Pn * xu * xu + 2.0 * Qn * xu * yu + Rn * yu * yu,
             Pn * xu * xv + Qn * (xu * yv + xv * yu) + Rn * yu * yv,
             Pn * xv * xv + 2.0 * Qn * xv * yv + Rn * yv * yv};
  out.p = out.p / out.r;
  out.q = out.q / out.r;
  out.r = Jet2::constant(1.0, n, {0, 0});
  return out;
}

}  // namespace

FundamentalForms fundamental_forms(const Surface& s, Point2 p, int order) {
  const JetVec3 f = s.map_jet(p, order + 2);
  const JetVec3 fu = f.d_du();
  const JetVec3 fv = f.d_dv();
  const JetVec3 fuu = fu.d_du();
  const JetVec3 fuv = fu.d_dv();
  const JetVec3 fvv = fv.d_dv();
  const JetVec3 nu = s.normal_jet(p, order);
  const JetVec3 a = fu.truncated(order);
  const JetVec3 b = fv.truncated(order);
  FundamentalForms out{dot(a, a), dot(a, b), dot(b, b),
                       dot(fuu, nu), dot(fuv, nu), dot(fvv, nu), {}, {}};
  const Jet2 W = out.E * out.G - out.F * out.F;
  if (std::abs(W.value()) > 1e-12 * (1.0 + std::abs(out.E.value() * out.G.value()))) {
    out.K = (out.L2 * out.N2 - out.M2 * out.M2) / W;
    out.H = (out.E * out.N2 - 2.0 * out.F * out.M2 + out.G * out.L2) / (2.0 * W);
  }
  return out;
}

std::string to_string(BdeKind k) {
  switch (k) {
    case BdeKind::kLc: return "lc";
    case BdeKind::kAs: return "as";
    case BdeKind::kCh: return "ch";
    case BdeKind::kCustom: return "custom";
  }
  return "custom";
}

BdeCoeffs Bde::at(Point2 pt, int order) const {
  if (order > max_order) {
    throw Error(ErrorCode::kOrderExceeded, "BDE coefficients requested at order " +
                                               std::to_string(order) + " > " +
                                               std::to_string(max_order));
  }
  return field(pt, order);
}

Vec3 Bde::values(Point2 pt) const {
  const BdeCoeffs c = at(pt, 0);
  return {c.p.value(), c.q.value(), c.r.value()};
}

Bde build_bde(const Surface& s, BdeKind kind, LcVariant variant) {
  if (kind == BdeKind::kCustom) {
    throw Error(ErrorCode::kContractViolation, "build_bde needs lc, as or ch");
  }
  Bde b;
  b.kind = kind;
  b.max_order = std::min(s.map_max_order() - 2, s.normal_max_order());
  b.field = [s, kind, variant](Point2 pt, int order) -> BdeCoeffs {
    const FundamentalForms ff = fundamental_forms(s, pt, order);
    const Jet2& E = ff.E;
    const Jet2& F = ff.F;
    const Jet2& G = ff.G;
    const Jet2& L = ff.L2;
    const Jet2& M = ff.M2;
    const Jet2& N = ff.N2;
    switch (kind) {
      case BdeKind::kLc:
        if (variant == LcVariant::kPrinted) {
          return {F * N - G * M, 0.5 * (E * N - G * L), E * N - F * L};
        }
        return {E * M - F * L, 0.5 * (E * N - G * L), F * N - G * M};
      case BdeKind::kAs:
        return {L, M, N};
      case BdeKind::kCh:
        return {L * (G * L - E * N) + 2.0 * M * (E * M - F * L),
                M * (G * L + E * N) - 2.0 * F * L * N,
                N * (E * N - G * L) + 2.0 * M * (G * M - F * N)};
      case BdeKind::kCustom:
        break;
    }
    throw Error(ErrorCode::kInternalInconsistency, "unreachable BDE kind");
  };
  return b;
}

Bde custom_bde(BdeField field, int max_order) {
  Bde b;
  b.field = std::move(field);
  b.kind = BdeKind::kCustom;
  b.max_order = max_order;
  return b;
}

Bde model_bde(double l) {
  return custom_bde([l](Point2 pt, int order) {
    const Jet2 u = Jet2::u_var(order, pt);
    const Jet2 v = Jet2::v_var(order, pt);
    return BdeCoeffs{v + 0.5 * l * u * u, Jet2::constant(0.0, order, pt),
                     Jet2::constant(1.0, order, pt)};
  });
}

Bde reduce_by_identifier(const Bde& b, const Surface& s) {
  if (b.reduced) throw Error(ErrorCode::kContractViolation, "BDE is already reduced");
  Bde out = b;
  out.reduced = true;
  if (b.kind == BdeKind::kAs) return out;

  const BdeField raw = b.field;
  const int max = b.max_order - 1;
  // Exact quotient at the foot point on the singular axis.
  auto on_axis = [raw](Point2 at, int order) {
    const BdeCoeffs c = raw(Point2{at.u, 0.0}, order + 1);
    return BdeCoeffs{divide_exact_by_v(c.p), divide_exact_by_v(c.q), divide_exact_by_v(c.r)};
  };
  on_axis(s.base(), std::min(2, max));

  out.max_order = max;
  out.field = [raw, on_axis, max](Point2 at, int order) -> BdeCoeffs {
    if (std::abs(at.v) >= 0.05) {
      const BdeCoeffs c = raw(at, order);
      const Jet2 v = Jet2::v_var(order, at);
      return {c.p / v, c.q / v, c.r / v};
    }
    const int high = std::min(order + 3, max);
    const BdeCoeffs c = on_axis(at, high);
    if (at.v == 0.0) {
      return {c.p.truncated(order), c.q.truncated(order), c.r.truncated(order)};
    }
    return {c.p.recentered(at).truncated(order), c.q.recentered(at).truncated(order),
            c.r.recentered(at).truncated(order)};
  };
  return out;
}

double discriminant(const Bde& b, Point2 pt) {
  const Vec3 c = b.values(pt);
  return c.y * c.y - c.x * c.z;
}

double coefficient_A(const BdeCoeffs& c) {
  const double r0 = c.r.value();
  const double scale0 = std::max({std::abs(c.p.value()), std::abs(c.q.value()), std::abs(r0)});
  if (c.p.order() < 2 || c.q.order() < 1) {
    throw Error(ErrorCode::kContractViolation, "coefficient_A needs 2-jets");
  }
  if (!(std::abs(r0) > 1e-12 * (1.0 + scale0))) {
    throw Error(ErrorCode::kNotFoldedType, "r(0) = 0");
  }
  const Jet2 P = c.p / c.r;
  const Jet2 Q = c.q / c.r;
  double scale = 0;
  for (int d = 0; d <= 2; ++d) {
    for (int j = 0; j <= d; ++j) scale = std::max(scale, std::abs(P.coeff(d - j, j)));
  }
  const double tol = 1e-8 * (1.0 + scale);
  double p01 = P.coeff(0, 1);
  double q10 = Q.coeff(1, 0);
  const double p20 = 2.0 * P.coeff(2, 0);
  if (std::abs(P.coeff(0, 0)) > tol || std::abs(P.coeff(1, 0)) > tol) {
    throw Error(ErrorCode::kNotFoldedType,
                "p/r or its u-derivative does not vanish (p=" + fmt(P.coeff(0, 0)) +
                    ", p_u=" + fmt(P.coeff(1, 0)) + ")");
  }
  if (std::abs(p01) <= tol) {
    throw Error(ErrorCode::kNotFoldedType, "(p/r)_v vanishes");
  }
  if (p01 < 0) {
    // v -> -v: p(u, -v) du^2 - 2 q(u, -v) du dv + r dv^2.
    p01 = -p01;
    q10 = -q10;
  }
  return (p20 - 2.0 * q10 * q10 - p01 * q10) / (p01 * p01);
}

FoldedReduction folded_reduction_pipeline(const BdeCoeffs& c) {
  coefficient_A(c);  // pattern check
  const int n = std::max(3, std::min({c.p.order(), c.q.order(), c.r.order(), 4}));
  Jet2 P = at_origin(c.p.truncated(n) / c.r.truncated(n));
  Jet2 Q = at_origin(c.q.truncated(n) / c.r.truncated(n));
  if (P.coeff(0, 1) < 0) {
    for (int d = 0; d <= n; ++d) {
      for (int j = 0; j <= d; ++j) {
        const double s = (j % 2 == 0) ? 1.0 : -1.0;
        P.set_coeff(d - j, j, s * P.coeff(d - j, j));
        Q.set_coeff(d - j, j, -s * Q.coeff(d - j, j));
      }
    }
  }
  const Point2 o{0, 0};
  Tensor t{P, Q, Jet2::constant(1.0, n, o)};

  // Stage one: normalizes the V coefficient and clears the 1-jet of Q.
  {
    const double p01 = t.p.coeff(0, 1);
    const double q10 = t.q.coeff(1, 0);
    const double q01 = t.q.coeff(0, 1);
    const double sq = std::sqrt(p01);
    const Jet2 U = Jet2::u_var(n + 1, o);
    const Jet2 V = Jet2::v_var(n + 1, o);
    const Jet2 x = -U / sq;
    const Jet2 y = V - q10 / (2.0 * p01) * U * U + q01 / sq * U * V;
    t = pull_back(t, x, y);
  }
  // Stage two: clears the UV and V^2 terms of P and the 2-jet of Q.
  {
    const double P11 = t.p.coeff(1, 1);
    const double P02 = 2.0 * t.p.coeff(0, 2);
    const double Q20 = 2.0 * t.q.coeff(2, 0);
    const double Q11 = t.q.coeff(1, 1);
    const double Q02 = 2.0 * t.q.coeff(0, 2);
    const double x20 = -P11 / 2, x11 = -P02 / 4;
    const double y30 = -Q20, y21 = P02 / 4 - Q11, y12 = -Q02;
    const int m = t.p.order();
    const Jet2 U = Jet2::u_var(m + 1, o);
    const Jet2 V = Jet2::v_var(m + 1, o);
    const Jet2 x = U + x20 / 2 * U * U + x11 * U * V;
    const Jet2 y = V + y30 / 6 * U * U * U + y21 / 2 * U * U * V + y12 / 2 * U * V * V;
    t = pull_back(t, x, y);
  }
  FoldedReduction out;
  out.p = t.p.truncated(2);
  out.q = t.q.truncated(2);
  out.A = 2.0 * out.p.coeff(2, 0);
  return out;
}

std::string to_string(FoldedType t) {
  switch (t) {
    case FoldedType::kSaddle: return "folded saddle";
    case FoldedType::kNode: return "folded node";
    case FoldedType::kFocus: return "folded focus";
    case FoldedType::kBoundary: return "boundary";
  }
  return "boundary";
}

FoldedClass classify_folded(double l) {
  constexpr double eps = 1e-9;
  FoldedClass c;
  c.l = l;
  if (l < -eps) {
    c.type = FoldedType::kSaddle;
  } else if (l > eps && l < 0.125 - eps) {
    c.type = FoldedType::kNode;
  } else if (l > 0.125 + eps) {
    c.type = FoldedType::kFocus;
  } else {
    c.type = FoldedType::kBoundary;
  }
  return c;
}

SwallowtailFoliations classify_swallowtail_foliations(const Surface& s,
                                                      const Invariants& inv) {
  if (!(std::abs(inv.kappa_nu) > 1e-9)) {
    throw Error(ErrorCode::kLimitingNormalCurvatureZero,
                "kappa_nu = " + fmt(inv.kappa_nu));
  }
  const auto& info = s.normal_form();
  if (!info || info->k != 2) {
    throw Error(ErrorCode::kWrongInputForm,
                "foliation classification needs a second-kind normal form");
  }
  const Surface F = info->u_axis ? s : to_u_axis_form(s);
  const Point2 o{0, 0};
  const Bde as = build_bde(F, BdeKind::kAs);
  const Bde ch = reduce_by_identifier(build_bde(F, BdeKind::kCh), F);
  const Bde lc = reduce_by_identifier(build_bde(F, BdeKind::kLc), F);

  SwallowtailFoliations out;
  out.A_as = coefficient_A(as.at(o, std::min(3, as.max_order)));
  out.A_ch = coefficient_A(ch.at(o, std::min(3, ch.max_order)));
  out.lc_discriminant = discriminant(lc, o);
  out.l_route2 = inv.mu_c * inv.tau_s / (4.0 * inv.kappa_nu);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.ratio_as = out.l_route2 != 0 ? out.A_as / out.l_route2 : nan;
  out.ratio_ch = out.l_route2 != 0 ? out.A_ch / out.l_route2 : nan;
  out.calibrated = out.A_as * inv.mu_c * inv.tau_s * inv.tau_s / (4.0 * inv.kappa_nu);
  out.as = classify_folded(out.A_as);
  out.ch = classify_folded(out.A_ch);
  out.sign_report = "A(as)=" + fmt(out.A_as) + " A(ch)=" + fmt(out.A_ch) +
                    " mu_c*tau_s/(4*kappa_nu)=" + fmt(out.l_route2) +
                    " A(as)/that=" + fmt(out.ratio_as) + " A(ch)/that=" + fmt(out.ratio_ch) +
                    " A(as)*mu_c*tau_s^2/(4*kappa_nu)=" + fmt(out.calibrated);
  return out;
}

}  // namespace frontal
