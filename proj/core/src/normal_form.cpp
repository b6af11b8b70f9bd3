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

#include "frontal/normal_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "frontal/frontal_analysis.hpp"

namespace frontal {
namespace {

constexpr double kFact[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880,
                            3628800, 39916800, 479001600};

Jet2 dv_n(Jet2 a, int n) {
  for (int i = 0; i < n; ++i) a = a.d_dv();
  return a;
}

// F_k[g] at order m from a jet of g of order >= m + k.
Jet2 kth_component(const Jet2& g, int k, int m) {
  const Point2 p = g.base();
  const Jet2 u = Jet2::u_var(m, p);
  const Jet2 v = Jet2::v_var(m, p);
  std::vector<Jet2> d;
  d.reserve(static_cast<std::size_t>(k + 1));
  Jet2 cur = g;
  for (int i = 0; i <= k; ++i) {
    d.push_back(cur.truncated(m));
    if (i < k) cur = cur.d_dv();
  }
  Jet2 out = (pow(v, k) / kFact[k] - u) * d[static_cast<std::size_t>(k)];
  for (int i = 1; i <= k; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    out += (sign / kFact[k - i]) * pow(v, k - i) * d[static_cast<std::size_t>(k - i)];
  }
  return out;
}

Jet2 reflect(const Jet2& s) {
  Jet2 r = s;
  for (int i = 1; i <= s.order(); i += 2) r.set_coeff(i, 0, -s.coeff(i, 0));
  return r;
}

JetVec3 unit(const JetVec3& n) {
  const Jet2 inv = 1.0 / sqrt(dot(n, n));
  return inv * n;
}

Vec3 coeff_vec(const JetVec3& f, int i, int j) {
  return {f.x.coeff(i, j), f.y.coeff(i, j), f.z.coeff(i, j)};
}

JetVec3 compose_vec(const JetVec3& f, const CurveSeries& g) {
  const int m = std::min(f.order(), g.u.order());
  return compose(f, g.u.truncated(m), g.v.truncated(m));
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string factor(char var, double base, int power) {
  if (power == 0) return {};
  std::string b(1, var);
  if (base != 0) b = std::string("(") + var + " - " + fmt(base) + ")";
  if (base < 0) b = std::string("(") + var + " + " + fmt(-base) + ")";
  return power == 1 ? b : b + "^" + std::to_string(power);
}

std::string polynomial_text(const Jet2& a) {
  std::string out;
  for (int d = 0; d <= a.order(); ++d) {
    for (int j = 0; j <= d; ++j) {
      const int i = d - j;
      const double c = a.coeff(i, j);
      if (c == 0) continue;
      std::string term = fmt(std::abs(c));
      for (const std::string& f : {factor('u', a.base().u, i), factor('v', a.base().v, j)}) {
        if (!f.empty()) term += "*" + f;
      }
      if (out.empty()) {
        out = c < 0 ? "-" + term : term;
      } else {
        out += (c < 0 ? " - " : " + ") + term;
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ScalarField polynomial_field(std::vector<Monomial> terms) {
  return [terms = std::move(terms)](Point2 p, int order) {
    const Jet2 u = Jet2::u_var(order, p);
    const Jet2 v = Jet2::v_var(order, p);
    int max_i = 0, max_j = 0;
    for (const auto& t : terms) {
      max_i = std::max(max_i, t.i);
      max_j = std::max(max_j, t.j);
    }
    std::vector<Jet2> up{Jet2::constant(1, order, p)};
    std::vector<Jet2> vp{Jet2::constant(1, order, p)};
    for (int i = 1; i <= max_i; ++i) up.push_back(up.back() * u);
    for (int j = 1; j <= max_j; ++j) vp.push_back(vp.back() * v);
    Jet2 out(order, p);
    for (const auto& t : terms) {
      out += t.c * (up[static_cast<std::size_t>(t.i)] * vp[static_cast<std::size_t>(t.j)]);
    }
    return out;
  };
}

Generator generator_from_def(const GeneratorDef& def) {
  return {field_from_expr(def.g), field_from_expr(def.h), def.k};
}

Surface build_kth_kind(const Generator& gen, int order, BuildReport* report) {
  const int k = gen.k;
  if (k < 2 || k > 9) {
    throw Error(ErrorCode::kContractViolation, "k must lie in [2, 9]");
  }
  const Point2 origin{0, 0};
  const Jet2 g0 = gen.g(origin, k + 2);
  const Jet2 h0 = gen.h(origin, k + 2);
  const double g1 = g0.partial(0, k + 1), g2 = g0.partial(0, k + 2);
  const double h1 = h0.partial(0, k + 1), h2 = h0.partial(0, k + 2);
  if (std::hypot(g1, h1) <= 1e-12) {
    throw Error(k == 2 ? ErrorCode::kNotSecondKind : ErrorCode::kNotKthKind,
                "(d_v^" + std::to_string(k + 1) + " g, d_v^" + std::to_string(k + 1) +
                    " h)(0) vanishes; the generator pair is degenerate");
  }
  if (report) {
    report->front_determinant = g1 * h2 - g2 * h1;
    report->is_front = std::abs(report->front_determinant) > 1e-12;
    report->warnings.clear();
    if (k == 2) report->warnings = extract_coeffs(gen).failed_predicates();
  }

  const ScalarField g = gen.g, h = gen.h;
  VectorField map = [g, h, k](Point2 p, int m) {
    return JetVec3{Jet2::u_var(m, p), kth_component(g(p, m + k), k, m),
                   kth_component(h(p, m + k), k, m)};
  };
  VectorField normal = [g, h, k](Point2 p, int m) {
    const Jet2 gj = g(p, m + k + 1);
    const Jet2 hj = h(p, m + k + 1);
    const Jet2 f2u = kth_component(gj, k, m + 1).d_du();
    const Jet2 f3u = kth_component(hj, k, m + 1).d_du();
    const Jet2 gk1 = dv_n(gj, k + 1).truncated(m);
    const Jet2 hk1 = dv_n(hj, k + 1).truncated(m);
    return JetVec3{hk1 * f2u - gk1 * f3u, -hk1, gk1};
  };
  Surface s(map, Jet2::kMaxOrder - k, normal, Jet2::kMaxOrder - 1 - k, origin,
            std::min(order, Jet2::kMaxOrder - 1 - k));
  s.set_normal_form({k, false, g, h});
  return s;
}

Surface build_second_kind(ScalarField g, ScalarField h, int order,
                          BuildReport* report) {
  return build_kth_kind({std::move(g), std::move(h), 2}, order, report);
}

Surface to_u_axis_form(const Surface& s) {
  const auto& info = s.normal_form();
  if (!info || info->k != 2 || info->u_axis) {
    throw Error(ErrorCode::kWrongInputForm,
                "the u-axis form needs a second-kind normal form built from (g, h)");
  }
  const ChartMap psi = [](Point2 p, int order) {
    const Jet2 x = Jet2::u_var(order, p);
    const Jet2 y = Jet2::v_var(order, p);
    return std::pair<Jet2, Jet2>{-y + 0.5 * x * x, x};
  };
  VectorField map = [f = s.map_field(), psi](Point2 p, int order) {
    auto [a, b] = psi(p, order);
    return -compose(f(Point2{a.value(), b.value()}, order), a, b);
  };
  VectorField normal = [n = *s.normal_field(), psi](Point2 p, int order) {
    auto [a, b] = psi(p, order);
    return compose(n(Point2{a.value(), b.value()}, order), a, b);
  };
  Surface out(map, s.map_max_order(), normal, s.normal_max_order(), {0, 0}, s.order());
  NormalFormInfo ni = *info;
  ni.u_axis = true;
  out.set_normal_form(ni);
  return out;
}

std::vector<std::string> CoeffTable::failed_predicates() const {
  std::vector<std::string> out;
  if (!predicates.g_zero) out.emplace_back("g(0) != 0");
  if (!predicates.h_zero) out.emplace_back("h(0) != 0");
  if (!predicates.g_balanced) out.emplace_back("g_u(0) != g_vv(0)");
  if (!predicates.h_balanced) out.emplace_back("h_u(0) != h_vv(0)");
  if (!predicates.h3_zero) out.emplace_back("h_vvv(0) != 0");
  if (!predicates.g3_positive) out.emplace_back("g_vvv(0) <= 0");
  return out;
}

CoeffTable extract_coeffs(const Generator& gen) {
  const Point2 origin{0, 0};
  const Jet2 g = gen.g(origin, 5);
  const Jet2 h = gen.h(origin, 5);
  CoeffTable t;
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; i + j <= 5; ++j) {
      t.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.partial(i, j);
      t.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h.partial(i, j);
    }
  }
  const double tol = 1e-12;
  t.predicates.g_zero = std::abs(t.a[0][0]) <= tol;
  t.predicates.h_zero = std::abs(t.b[0][0]) <= tol;
  t.predicates.g_balanced = std::abs(t.a[1][0] - t.a[0][2]) <= tol;
  t.predicates.h_balanced = std::abs(t.b[1][0] - t.b[0][2]) <= tol;
  t.predicates.h3_zero = std::abs(t.b[0][3]) <= tol;
  t.predicates.g3_positive = t.a[0][3] > tol;
  return t;
}

FourJets expansion_coefficients(const Surface& s) {
  const JetVec3 f = s.map_jet({0, 0}, 4);
  return {f.y, f.z};
}

FourJets closed_form_four_jets(const CoeffTable& t) {
  const Point2 origin{0, 0};
  Jet2 y(4, origin);
  Jet2 z(4, origin);
  const auto& a = t.a;
  const auto& b = t.b;
  y.set_coeff(2, 0, (-2 * a[1][2] + a[2][0]) / 2);
  y.set_coeff(3, 0, (-3 * a[2][2] + a[3][0]) / 6);
  y.set_coeff(4, 0, (-4 * a[3][2] + a[4][0]) / 24);
  y.set_coeff(1, 1, -a[0][3]);
  y.set_coeff(2, 1, -a[1][3]);
  y.set_coeff(3, 1, -a[2][3] / 2);
  y.set_coeff(1, 2, -a[0][4] / 2);
  y.set_coeff(2, 2, -a[1][4] / 2);
  y.set_coeff(0, 3, a[0][3] / 6);
  y.set_coeff(1, 3, (-a[0][5] + a[1][3]) / 6);
  y.set_coeff(0, 4, a[0][4] / 8);
  z.set_coeff(2, 0, (-2 * b[1][2] + b[2][0]) / 2);
  z.set_coeff(3, 0, (-3 * b[2][2] + b[3][0]) / 6);
  z.set_coeff(4, 0, (-4 * b[3][2] + b[4][0]) / 24);
  z.set_coeff(2, 1, -b[1][3]);
  z.set_coeff(3, 1, -b[2][3] / 2);
  z.set_coeff(1, 2, -b[0][4] / 2);
  z.set_coeff(2, 2, -b[1][4] / 2);
  z.set_coeff(1, 3, (-b[0][5] + b[1][3]) / 6);
  z.set_coeff(0, 4, b[0][4] / 8);
  return {y, z};
}

Invariants invariants_from_coeffs(const CoeffTable& t) {
  if (!t.predicates.all()) {
    std::string why;
    for (const auto& w : t.failed_predicates()) why += (why.empty() ? "" : ", ") + w;
    throw Error(ErrorCode::kNotNormalized,
                "generator pair is not normalized (" + why + "); use the general route");
  }
  Invariants inv;
  inv.kappa_nu = -2 * t.b[1][2] + t.b[2][0];
  inv.mu_c = t.b[0][4] / (t.a[0][3] * t.a[0][3]);
  inv.tau_s = 2 * t.a[0][3];
  inv.route = Invariants::Route::kCoefficients;
  return inv;
}

LimitResult kappa_nu_limit(const Surface& s, bool position_denominator) {
  const Point2 p = s.base();
  const int n = s.order() - 1;
  const CurveSeries g = singular_curve_series(s, p, n);
  const JetVec3 gh = compose_vec(s.map_jet(p, n), g);
  const JetVec3 d1 = gh.d_du();
  const JetVec3 d2 = d1.d_du();
  const JetVec3 nu = compose_vec(unit(s.normal_jet(p, n)), g).truncated(d2.order());
  const Jet2 num = dot(d2, nu);
  Jet2 den;
  if (position_denominator) {
    const JetVec3 rel = gh - constant_vec(gh.value(), gh.order(), gh.base());
    den = dot(rel, rel);
  } else {
    den = dot(d1, d1);
  }
  auto lowest = [](const Jet2& a) {
    double scale = 0;
    for (int i = 0; i <= a.order(); ++i) scale = std::max(scale, std::abs(a.coeff(i, 0)));
    for (int i = 0; i <= a.order(); ++i) {
      if (std::abs(a.coeff(i, 0)) > 1e-9 * std::max(1.0, scale)) return i;
    }
    return -1;
  };
  LimitResult r;
  r.numerator_order = lowest(num);
  r.denominator_order = lowest(den);
  if (r.denominator_order < 0) return r;
  if (r.numerator_order >= 0 && r.numerator_order < r.denominator_order) return r;
  if (r.denominator_order > num.order()) return r;
  r.finite = true;
  r.value = num.coeff(r.denominator_order, 0) / den.coeff(r.denominator_order, 0);
  return r;
}

Invariants invariants_general(const Surface& s) {
  const Point2 p = s.base();
  const KindClassification kc = classify_point(s, p);
  if (kc.kind != PointKind::kKthKind || kc.k != 2) {
    throw Error(ErrorCode::kWrongKind,
                "invariants need a second-kind singular point; found " + kc.describe());
  }
  Invariants inv;
  inv.route = Invariants::Route::kGeneral;

  const LimitResult kl = kappa_nu_limit(s, false);
  if (!kl.finite) {
    throw Error(ErrorCode::kLimitDiverges, "kappa_nu limit does not exist");
  }
  inv.kappa_nu = kl.value;

  const int n = s.order() - 1;
  CurveSeries g = singular_curve_series(s, p, n);
  const JetVec3 f = s.map_jet(p, n);
  const JetVec3 nu = unit(s.normal_jet(p, n));

  // Orientation of gamma: phi'(0) psi'(0) < 0.
  {
    const JetVec3 fn = s.map_jet(p, n + 1);
    const Jet2 lam = det3(fn.d_du(), fn.d_dv(), nu);
    auto [a, b] = extended_null_field(s, p, n);
    const Jet2 lu = lam.d_du(), lv = lam.d_dv();
    const Jet2 eta_lam = a.truncated(lu.order()) * lu + b.truncated(lv.order()) * lv;
    const int m = eta_lam.order();
    const Jet2 psi = compose(eta_lam, g.u.truncated(m), g.v.truncated(m));
    const Jet2 ag = compose(a, g.u, g.v).truncated(n - 1);
    const Jet2 bg = compose(b, g.u, g.v).truncated(n - 1);
    const Jet2 phi = g.u.d_du() * bg - g.v.d_du() * ag;
    const double prod = phi.coeff(1, 0) * psi.coeff(1, 0);
    if (prod == 0) {
      throw Error(ErrorCode::kInternalInconsistency,
                  "phi'(0) psi'(0) vanishes at a second-kind point");
    }
    if (prod > 0) g = {reflect(g.u), reflect(g.v)};
  }
  const JetVec3 gh = compose_vec(f, g);
  const Vec3 g2 = 2.0 * coeff_vec(gh, 2, 0);
  const Vec3 g3 = 6.0 * coeff_vec(gh, 3, 0);
  const Vec3 nu0 = nu.value();
  inv.tau_s = det3(g2, g3, nu0) / std::pow(norm(g2), 2.5);

  // mu_c in coordinates (U, V) -> p + U e1 + V eta0.
  const Point2 eta0 = null_direction(s, p);
  Point2 e1{eta0.v, -eta0.u};
  const Point2 origin{0, 0};
  const Jet2 U = Jet2::u_var(2, origin);
  const Jet2 V = Jet2::v_var(2, origin);
  const Jet2 iu = p.u + e1.u * U + eta0.u * V;
  const Jet2 iv = p.v + e1.v * U + eta0.v * V;
  const JetVec3 F = compose(s.map_jet(p, 2), iu, iv);
  const JetVec3 Nu = compose(unit(s.normal_jet(p, 2)), iu, iv);
  Vec3 fU = coeff_vec(F, 1, 0);
  Vec3 fUV = coeff_vec(F, 1, 1);
  const Vec3 nuV = coeff_vec(Nu, 0, 1);
  if (dot(fU, g2) > 0) {
    fU = -fU;
    fUV = -fUV;
  }
  const double c = norm(cross(fUV, fU));
  inv.mu_c = -std::pow(norm(fU), 3) * dot(fUV, nuV) / (c * c);
  return inv;
}

void write_surface_file(std::ostream& os, const Surface& s, int order,
                        const std::string& comment) {
  const Point2 p = s.base();
  const int m = std::min(order, s.map_max_order());
  const JetVec3 f = s.map_jet(p, m);
  if (!comment.empty()) os << "# " << comment << "\n";
  os << "order = " << s.order() << "\n";
  os << "point = " << fmt(p.u) << ", " << fmt(p.v) << "\n";
  os << "x = " << polynomial_text(f.x) << "\n";
  os << "y = " << polynomial_text(f.y) << "\n";
  os << "z = " << polynomial_text(f.z) << "\n";
  if (s.has_normal()) {
    const JetVec3 n = s.normal_jet(p, std::min(m, s.normal_max_order()));
    os << "normal = " << polynomial_text(n.x) << ", " << polynomial_text(n.y) << ", "
       << polynomial_text(n.z) << "\n";
  }
}

}  // namespace frontal
