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

#include "frontal/render.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "frontal/error.hpp"

#ifndef FRONTAL_VERSION
#define FRONTAL_VERSION "0.0.0"
#endif

namespace frontal {
namespace {

std::string fmt6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

struct Canvas {
  const PortraitSpec& spec;
  double x(double u) const {
    return (u - spec.window.umin) / (spec.window.umax - spec.window.umin) * spec.width;
  }
  double y(double v) const {
    return (spec.window.vmax - v) / (spec.window.vmax - spec.window.vmin) * spec.height;
  }
  std::string pt(Point2 p) const { return fmt6(x(p.u)) + "," + fmt6(y(p.v)); }
};

// Zero set of f on a grid as a path string.
std::string contour(const Canvas& cv, const std::function<double(Point2)>& f) {
  const Rect& w = cv.spec.window;
  const int n = cv.spec.grid;
  const double du = (w.umax - w.umin) / n, dv = (w.vmax - w.vmin) / n;
  std::vector<double> val(static_cast<std::size_t>((n + 1) * (n + 1)));
  auto at = [&](int i, int j) -> double& { return val[static_cast<std::size_t>(j * (n + 1) + i)]; };
  auto node = [&](int i, int j) { return Point2{w.umin + i * du, w.vmin + j * dv}; };
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) at(i, j) = f(node(i, j));
  }
  std::string d;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int ci[4][2] = {{i, j}, {i + 1, j}, {i + 1, j + 1}, {i, j + 1}};
      std::vector<Point2> hits;
      for (int e = 0; e < 4; ++e) {
        const auto* a = ci[e];
        const auto* b = ci[(e + 1) % 4];
        const double fa = at(a[0], a[1]), fb = at(b[0], b[1]);
        if (!std::isfinite(fa) || !std::isfinite(fb)) continue;
        if ((fa < 0) != (fb < 0)) {
          const double t = fa / (fa - fb);
          const Point2 pa = node(a[0], a[1]), pb = node(b[0], b[1]);
          hits.push_back({pa.u + t * (pb.u - pa.u), pa.v + t * (pb.v - pa.v)});
        }
      }
      for (std::size_t k = 0; k + 1 < hits.size(); k += 2) {
        d += "M" + cv.pt(hits[k]) + "L" + cv.pt(hits[k + 1]);
      }
    }
  }
  return d;
}

}  // namespace

std::string fmt17(double x) {
  if (x == 0) x = 0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void PortraitSpec::validate() const {
  if (!window.valid() || width <= 0 || height <= 0 || grid <= 0) {
    throw Error(ErrorCode::kContractViolation, "portrait needs a window and positive size");
  }
}

void write_curves_csv(std::ostream& os, const Surface& s,
                      const std::vector<SolutionCurve>& curves) {
  os << "curve_id,branch,t,u,v,x,y,z\n";
  for (std::size_t id = 0; id < curves.size(); ++id) {
    const SolutionCurve& c = curves[id];
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const Point2 p = c.points[i];
      const Vec3 x = s.point(p);
      os << id << ',' << c.branch << ',' << fmt17(c.t[i]) << ',' << fmt17(p.u) << ','
         << fmt17(p.v) << ',' << fmt17(x.x) << ',' << fmt17(x.y) << ',' << fmt17(x.z) << '\n';
    }
  }
}

void write_portrait_svg(std::ostream& os, const PortraitSpec& spec, const Surface& s,
                        const Bde& b, const std::vector<SolutionCurve>& curves,
                        const std::vector<Point2>& folded) {
  spec.validate();
  const Canvas cv{spec};
  const std::string lw = fmt6(spec.line_width);
  os << "<!-- frontal " << FRONTAL_VERSION << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width << "\" height=\""
     << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (spec.discriminant) {
    os << "<g id=\"discriminant\" fill=\"none\" stroke=\"#555555\" stroke-dasharray=\"6,4\" "
          "stroke-width=\""
       << lw << "\">\n";
    const std::string d = contour(cv, [&](Point2 p) { return discriminant(b, p); });
    if (!d.empty()) os << "<path d=\"" << d << "\"/>\n";
    os << "</g>\n";
  }
  if (spec.singular_set) {
    os << "<g id=\"singular-set\" fill=\"none\" stroke=\"black\" stroke-width=\""
       << fmt6(3 * spec.line_width) << "\">\n";
    const std::string d =
        contour(cv, [&](Point2 p) { return identifier_lambda(s, p, 0).value(); });
    if (!d.empty()) os << "<path d=\"" << d << "\"/>\n";
    os << "</g>\n";
  }
  if (spec.families) {
    for (int fam = 0; fam < 2; ++fam) {
      os << "<g id=\"family-" << fam + 1 << "\" fill=\"none\" stroke=\""
         << spec.family_colors[static_cast<std::size_t>(fam)] << "\" stroke-width=\"" << lw
         << "\">\n";
      for (const SolutionCurve& c : curves) {
        if (c.branch != fam || c.points.size() < 2) continue;
        os << "<polyline points=\"";
        for (std::size_t i = 0; i < c.points.size(); ++i) {
          if (i) os << ' ';
          os << cv.pt(c.points[i]);
        }
        os << "\"/>\n";
      }
      os << "</g>\n";
    }
  }
  if (spec.folded_points) {
    os << "<g id=\"folded-points\" fill=\"black\">\n";
    for (const Point2& p : folded) {
      if (!spec.window.contains(p)) continue;
      os << "<circle cx=\"" << fmt6(cv.x(p.u)) << "\" cy=\"" << fmt6(cv.y(p.v)) << "\" r=\""
         << fmt6(4 * spec.line_width) << "\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

void write_obj_mesh(std::ostream& os, const Surface& s, const Rect& window, int nx, int ny) {
  if (!window.valid() || nx < 2 || ny < 2) {
    throw Error(ErrorCode::kContractViolation, "mesh needs a window and at least 2x2 vertices");
  }
  os << "# frontal " << FRONTAL_VERSION << " mesh " << nx << 'x' << ny << '\n';
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2 p{window.umin + (window.umax - window.umin) * i / (nx - 1),
                     window.vmin + (window.vmax - window.vmin) * j / (ny - 1)};
      const Vec3 x = s.point(p);
      os << "v " << fmt17(x.x) << ' ' << fmt17(x.y) << ' ' << fmt17(x.z) << '\n';
    }
  }
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      const int a = j * nx + i + 1;
      const int b = a + 1;
      const int c = a + nx;
      const int d = c + 1;
      os << "f " << a << ' ' << b << ' ' << d << '\n';
      os << "f " << a << ' ' << d << ' ' << c << '\n';
    }
  }
}

}  // namespace frontal
