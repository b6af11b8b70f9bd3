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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <optional>
#include <thread>

#include "frontal/bde.hpp"
#include "frontal/error.hpp"

namespace frontal {
namespace {

constexpr double kSwitch = 1e-4;  // lifted-field threshold on delta / scale^2

double dot2(Point2 a, Point2 b) { return a.u * b.u + a.v * b.v; }

Point2 unit(Point2 a) {
  const double n = std::hypot(a.u, a.v);
  return {a.u / n, a.v / n};
}

struct Local {
  double p, q, r;
  double delta() const { return q * q - p * r; }
  double scale() const { return std::max({std::abs(p), std::abs(q), std::abs(r)}); }
};

Local local(const Bde& b, Point2 x) {
  const Vec3 c = b.values(x);
  return {c.x, c.y, c.z};
}

// The two unit solutions of p a^2 + 2q ab + r b^2 = 0 from the eigenframe of
// [[p, q], [q, r]].
std::optional<std::pair<Point2, Point2>> roots(const Local& c) {
  if (!(c.delta() > 0)) return std::nullopt;
  const double phi = 0.5 * std::atan2(2 * c.q, c.p - c.r);
  const double m = 0.5 * (c.p + c.r);
  const double rad = std::hypot(0.5 * (c.p - c.r), c.q);
  const double lp = m + rad, lm = m - rad;
  const Point2 e1{std::cos(phi), std::sin(phi)};
  const Point2 e2{-std::sin(phi), std::cos(phi)};
  const double a = std::sqrt(std::max(0.0, -lm));
  const double b = std::sqrt(std::max(0.0, lp));
  return std::pair{unit({a * e1.u + b * e2.u, a * e1.v + b * e2.v}),
                   unit({a * e1.u - b * e2.u, a * e1.v - b * e2.v})};
}

// Root direction closest to ref, oriented along it.
std::optional<Point2> follow(const Bde& b, Point2 x, Point2 ref) {
  const auto r = roots(local(b, x));
  if (!r) return std::nullopt;
  Point2 d = std::abs(dot2(r->first, ref)) >= std::abs(dot2(r->second, ref)) ? r->first
                                                                           : r->second;
  if (dot2(d, ref) < 0) d = {-d.u, -d.v};
  return d;
}

struct Lift {
  double u, v, th;
};

// Unnormalized lifted field and F(u, v, theta).
struct LiftEval {
  double xu, xv, xt;
  double F, Ft;
};

LiftEval lift_field(const Bde& b, const Lift& s) {
  const BdeCoeffs c = b.at({s.u, s.v}, 1);
  const double cs = std::cos(s.th), sn = std::sin(s.th);
  auto quad = [&](double p, double q, double r) { return p * cs * cs + 2 * q * cs * sn + r * sn * sn; };
  const double p = c.p.value(), q = c.q.value(), r = c.r.value();
  const double F = quad(p, q, r);
  const double Ft = 2 * (r - p) * cs * sn + 2 * q * (cs * cs - sn * sn);
  const double Fu = quad(c.p.coeff(1, 0), c.q.coeff(1, 0), c.r.coeff(1, 0));
  const double Fv = quad(c.p.coeff(0, 1), c.q.coeff(0, 1), c.r.coeff(0, 1));
  return {Ft * cs, Ft * sn, -(Fu * cs + Fv * sn), F, Ft};
}

class Tracer {
 public:
  Tracer(const Bde& b, const Rect& w, const IntegrationOptions& o) : b_(b), w_(w), o_(o) {}

  // Integrates from x0 leaving along dir; returns points after x0 with their
  // arclength and the stop reason.
  StopReason run(Point2 x0, Point2 dir, std::vector<Point2>& pts, std::vector<double>& len) {
    Point2 x = x0;
    double s = 0;
    double h = o_.step;
    const double hmin = 1e-9 * o_.step;
    bool lifted = false;
    Lift L{};
    double sign = 1;
    for (int it = 0; it < o_.max_steps; ++it) {
      const Local c = local(b_, x);
      const double thr = kSwitch * c.scale() * c.scale();
      if (!lifted && c.delta() < thr) {
        L = {x.u, x.v, std::atan2(dir.v, dir.u)};
        const LiftEval e = lift_field(b_, L);
        sign = (e.xu * dir.u + e.xv * dir.v) >= 0 ? 1.0 : -1.0;
        if (e.xu == 0 && e.xv == 0) sign = 1.0;
        lifted = true;
      } else if (lifted && c.delta() > 2 * thr) {
        Point2 d{std::cos(L.th), std::sin(L.th)};
        if (dot2(d, dir) < 0) d = {-d.u, -d.v};
        dir = d;
        lifted = false;
      }

      Point2 next{};
      Point2 next_dir = dir;
      double err = 0;
      if (!lifted) {
        auto f = [&](Point2 y) { return follow(b_, y, dir); };
        const auto k0 = f(x);
        auto rk = [&](Point2 y, double hh) -> std::optional<Point2> {
          const auto k1 = (y.u == x.u && y.v == x.v) ? k0 : f(y);
          if (!k1) return std::nullopt;
          const auto k2 = f({y.u + hh / 2 * k1->u, y.v + hh / 2 * k1->v});
          if (!k2) return std::nullopt;
          const auto k3 = f({y.u + hh / 2 * k2->u, y.v + hh / 2 * k2->v});
          if (!k3) return std::nullopt;
          const auto k4 = f({y.u + hh * k3->u, y.v + hh * k3->v});
          if (!k4) return std::nullopt;
          return Point2{y.u + hh / 6 * (k1->u + 2 * k2->u + 2 * k3->u + k4->u),
                        y.v + hh / 6 * (k1->v + 2 * k2->v + 2 * k3->v + k4->v)};
        };
        const auto full = rk(x, h);
        const auto half = rk(x, h / 2);
        std::optional<Point2> two;
        if (half) two = rk(*half, h / 2);
        if (!full || !two) {
          h /= 2;
          if (h < hmin) return StopReason::kStepUnderflow;
          continue;
        }
        err = std::hypot(full->u - two->u, full->v - two->v);
        next = *two;
        const auto nd = f(next);
        if (nd) next_dir = *nd;
      } else {
        double scale = c.scale();
        auto f = [&](const Lift& y) -> std::optional<Lift> {
          const LiftEval e = lift_field(b_, y);
          const double n = std::sqrt(e.xu * e.xu + e.xv * e.xv + e.xt * e.xt);
          if (!(n > 1e-10 * std::max(scale, 1e-300))) return std::nullopt;
          return Lift{sign * e.xu / n, sign * e.xv / n, sign * e.xt / n};
        };
        const auto k0 = f(L);
        if (!k0) return StopReason::kFoldedPoint;
        auto rk = [&](const Lift& y, double hh) -> std::optional<Lift> {
          const auto k1 = (y.u == L.u && y.v == L.v && y.th == L.th) ? k0 : f(y);
          if (!k1) return std::nullopt;
          const auto k2 = f({y.u + hh / 2 * k1->u, y.v + hh / 2 * k1->v, y.th + hh / 2 * k1->th});
          if (!k2) return std::nullopt;
          const auto k3 = f({y.u + hh / 2 * k2->u, y.v + hh / 2 * k2->v, y.th + hh / 2 * k2->th});
          if (!k3) return std::nullopt;
          const auto k4 = f({y.u + hh * k3->u, y.v + hh * k3->v, y.th + hh * k3->th});
          if (!k4) return std::nullopt;
          return Lift{y.u + hh / 6 * (k1->u + 2 * k2->u + 2 * k3->u + k4->u),
                      y.v + hh / 6 * (k1->v + 2 * k2->v + 2 * k3->v + k4->v),
                      y.th + hh / 6 * (k1->th + 2 * k2->th + 2 * k3->th + k4->th)};
        };
        const auto full = rk(L, h);
        const auto half = rk(L, h / 2);
        std::optional<Lift> two;
        if (half) two = rk(*half, h / 2);
        if (!full || !two) {
          h /= 2;
          if (h < hmin) return StopReason::kFoldedPoint;
          continue;
        }
        err = std::sqrt((full->u - two->u) * (full->u - two->u) +
                        (full->v - two->v) * (full->v - two->v) +
                        (full->th - two->th) * (full->th - two->th));
        if (err <= o_.tol) {
          Lift y = *two;
          // Back onto F = 0.
          for (int k = 0; k < 3; ++k) {
            const LiftEval e = lift_field(b_, y);
            if (std::abs(e.Ft) < 1e-8 * std::max(scale, 1e-300)) break;
            y.th -= e.F / e.Ft;
          }
          const Point2 mv{y.u - L.u, y.v - L.v};
          if (std::hypot(mv.u, mv.v) > 0) next_dir = unit(mv);
          L = y;
          next = {y.u, y.v};
        }
      }

      if (err > o_.tol) {
        h /= 2;
        if (h < hmin) return StopReason::kStepUnderflow;
        continue;
      }
      if (!w_.contains(next)) return StopReason::kLeftWindow;
      s += std::hypot(next.u - x.u, next.v - x.v);
      x = next;
      dir = next_dir;
      pts.push_back(x);
      len.push_back(s);
      if (s >= o_.max_len) return StopReason::kMaxLength;
      if (err < o_.tol / 32) h = std::min(2 * h, o_.step);
    }
    return StopReason::kMaxSteps;
  }

 private:
  const Bde& b_;
  const Rect& w_;
  const IntegrationOptions& o_;
};

std::vector<SolutionCurve> trace_seed(const Bde& b, const Rect& w,
                                      const IntegrationOptions& o, int index, Point2 seed) {
  std::vector<SolutionCurve> out;
  if (!w.contains(seed)) return out;
  const auto r = roots(local(b, seed));
  if (!r) return out;
  const Point2 dirs[2] = {r->first, r->second};
  for (int branch = 0; branch < 2; ++branch) {
    Tracer tr(b, w, o);
    std::vector<Point2> bp, fp;
    std::vector<double> bl, fl;
    SolutionCurve c;
    c.seed_index = index;
    c.branch = branch;
    const Point2 d = dirs[branch];
    c.stop_backward = tr.run(seed, {-d.u, -d.v}, bp, bl);
    c.stop_forward = tr.run(seed, d, fp, fl);
    for (std::size_t i = bp.size(); i-- > 0;) {
      c.points.push_back(bp[i]);
      c.t.push_back(-bl[i]);
    }
    c.points.push_back(seed);
    c.t.push_back(0);
    for (std::size_t i = 0; i < fp.size(); ++i) {
      c.points.push_back(fp[i]);
      c.t.push_back(fl[i]);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Antiderivative in the series variable (u slot), truncated to the same order.
Jet2 integrate(const Jet2& a, double c0) {
  Jet2 out(a.order(), a.base());
  out.set_coeff(0, 0, c0);
  for (int i = 0; i + 1 <= a.order(); ++i) out.set_coeff(i + 1, 0, a.coeff(i, 0) / (i + 1));
  return out;
}

}  // namespace

std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::kLeftWindow: return "left-window";
    case StopReason::kMaxLength: return "max-length";
    case StopReason::kStepUnderflow: return "step-underflow";
    case StopReason::kNoDirection: return "no-direction";
    case StopReason::kFoldedPoint: return "folded-point";
    case StopReason::kMaxSteps: return "max-steps";
  }
  return "max-steps";
}

std::vector<Point2> solution_directions(const Bde& b, Point2 pt) {
  const auto r = roots(local(b, pt));
  if (!r) return {};
  return {r->first, r->second};
}

std::vector<SolutionCurve> integrate_solutions(const Bde& b, const Rect& window,
                                               const std::vector<Point2>& seeds,
                                               const IntegrationOptions& opts) {
  if (!window.valid()) throw Error(ErrorCode::kContractViolation, "empty window");
  if (!(opts.step > 0) || !(opts.max_len > 0) || !(opts.tol > 0)) {
    throw Error(ErrorCode::kContractViolation, "step, max_len and tol must be positive");
  }
  std::vector<std::vector<SolutionCurve>> per_seed(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        per_seed[i] = trace_seed(b, window, opts, static_cast<int>(i), seeds[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned n = opts.threads > 0 ? static_cast<unsigned>(opts.threads)
                                : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, seeds.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<SolutionCurve> out;
  for (auto& v : per_seed) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Point2> portrait_seeds(const Bde& b, const Rect& window, int n) {
  if (n < 1 || !window.valid()) throw Error(ErrorCode::kContractViolation, "bad seed grid");
  const double du = (window.umax - window.umin) / n;
  const double dv = (window.vmax - window.vmin) / n;
  std::vector<Point2> grid;
  std::vector<double> delta;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Point2 p{window.umin + (i + 0.5) * du, window.vmin + (j + 0.5) * dv};
      grid.push_back(p);
      delta.push_back(discriminant(b, p));
    }
  }
  std::vector<Point2> out;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (delta[k] > 0) out.push_back(grid[k]);
  }
  // Straddling seeds: bisect each sign change and step to the positive side.
  auto straddle = [&](std::size_t a, std::size_t c) {
    if ((delta[a] > 0) == (delta[c] > 0)) return;
    Point2 pos = delta[a] > 0 ? grid[a] : grid[c];
    Point2 neg = delta[a] > 0 ? grid[c] : grid[a];
    for (int it = 0; it < 40; ++it) {
      const Point2 mid{0.5 * (pos.u + neg.u), 0.5 * (pos.v + neg.v)};
      if (discriminant(b, mid) > 0) pos = mid; else neg = mid;
    }
    out.push_back(pos);
  };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = static_cast<std::size_t>(j * n + i);
      if (i + 1 < n) straddle(k, k + 1);
      if (j + 1 < n) straddle(k, k + static_cast<std::size_t>(n));
    }
  }
  return out;
}

CurveSeries solution_series(const Bde& b, Point2 pt, double theta0, int order) {
  if (order < 1 || order + 1 > b.max_order) {
    throw Error(ErrorCode::kOrderExceeded, "solution series order out of range");
  }
  const BdeCoeffs c = b.at(pt, order + 1);
  const Jet2 pu = c.p.d_du(), pv = c.p.d_dv();
  const Jet2 qu = c.q.d_du(), qv = c.q.d_dv();
  const Jet2 ru = c.r.d_du(), rv = c.r.d_dv();
  const Jet2 p = c.p.truncated(order), q = c.q.truncated(order), r = c.r.truncated(order);
  {
    const double cs = std::cos(theta0), sn = std::sin(theta0);
    const double F = p.value() * cs * cs + 2 * q.value() * cs * sn + r.value() * sn * sn;
    const double scale = std::max({std::abs(p.value()), std::abs(q.value()), std::abs(r.value())});
    if (std::abs(F) > 1e-8 * (1.0 + scale)) {
      throw Error(ErrorCode::kContractViolation, "theta0 does not solve the BDE at the point");
    }
  }
  const Point2 o{0, 0};
  Jet2 U = Jet2::constant(pt.u, order, o);
  Jet2 V = Jet2::constant(pt.v, order, o);
  Jet2 T = Jet2::constant(theta0, order, o);
  double norm = 1.0;
  for (int it = 0; it <= order + 1; ++it) {
    const Jet2 cs = cos(T), sn = sin(T);
    auto quad = [&](const Jet2& a, const Jet2& bb, const Jet2& cc) {
      return compose(a, U, V) * cs * cs + 2.0 * compose(bb, U, V) * cs * sn +
             compose(cc, U, V) * sn * sn;
    };
    const Jet2 Ft = 2.0 * (compose(r, U, V) - compose(p, U, V)) * cs * sn +
                    2.0 * compose(q, U, V) * (cs * cs - sn * sn);
    const Jet2 Fu = quad(pu, qu, ru);
    const Jet2 Fv = quad(pv, qv, rv);
    const Jet2 xu = Ft * cs, xv = Ft * sn, xt = -(Fu * cs + Fv * sn);
    if (it == 0) {
      norm = std::sqrt(xu.value() * xu.value() + xv.value() * xv.value() + xt.value() * xt.value());
      if (!(norm > 0)) throw Error(ErrorCode::kNotFoldedType, "lifted field vanishes at the point");
    }
    U = integrate(xu / norm, pt.u);
    V = integrate(xv / norm, pt.v);
    T = integrate(xt / norm, theta0);
  }
  return {U, V};
}

CuspCertificate cusp_certificate(const Surface& s, const CurveSeries& curve) {
  const int n = std::min({curve.u.order(), s.map_max_order(), 6});
  if (n < 3) throw Error(ErrorCode::kOrderExceeded, "cusp certificate needs 3-jets");
  const Point2 p0{curve.u.value(), curve.v.value()};
  const JetVec3 f = s.map_jet(p0, n);
  const Jet2 cu = curve.u.truncated(n), cv = curve.v.truncated(n);
  const JetVec3 g = compose(f, cu, cv);
  auto deriv = [&](int k) {
    const double fac = k == 1 ? 1 : (k == 2 ? 2 : 6);
    return Vec3{fac * g.x.coeff(k, 0), fac * g.y.coeff(k, 0), fac * g.z.coeff(k, 0)};
  };
  const Vec3 g1 = deriv(1), g2 = deriv(2), g3 = deriv(3);
  CuspCertificate out;
  out.d1 = norm(g1);
  out.d2 = norm(g2);
  out.d3 = norm(g3);
  out.cross = (out.d2 > 0 && out.d3 > 0) ? norm(cross(g2, g3)) / (out.d2 * out.d3) : 0.0;
  const double scale = std::max(1.0, f.max_abs());
  const bool vanish = out.d2 > 1e-12 * scale && out.d1 < 1e-6 * out.d2;
  const bool nondeg = out.cross > 1e-6;
  out.ok = vanish && nondeg;
  char buf[200];
  std::snprintf(buf, sizeof buf, "|g'|=%.3e |g''|=%.3e |g'''|=%.3e sin(g'',g''')=%.3e",
                out.d1, out.d2, out.d3, out.cross);
  out.diagnostics = buf;
  if (!vanish) out.diagnostics += out.d2 <= 1e-12 * scale ? " (g'' vanishes)" : " (g' does not vanish)";
  else if (!nondeg) out.diagnostics += " (g'', g''' dependent)";
  return out;
}

}  // namespace frontal
