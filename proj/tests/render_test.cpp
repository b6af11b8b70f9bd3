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

#include <cstdlib>
#include <sstream>

#include "frontal/error.hpp"
#include "frontal/normal_form.hpp"
#include "frontal/render.hpp"
#include "test_support.hpp"

namespace frontal {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::size_t count(const std::string& text, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t at = text.find(what); at != std::string::npos; at = text.find(what, at + 1)) ++n;
  return n;
}

TEST(Render, Fmt17RoundTripsAndHasNoNegativeZero) {
  EXPECT_EQ(fmt17(-0.0), "0");
  EXPECT_EQ(fmt17(0.5), "0.5");
  for (double x : {0.1, -1.0 / 3, 1e-300, 12345.678901234567}) {
    EXPECT_EQ(std::strtod(fmt17(x).c_str(), nullptr), x);
  }
}

TEST(Render, CurvesCsv) {
  const Surface s = testing::surface_from_text("x = u\ny = v\nz = u^2 - v^2");
  SolutionCurve a;
  a.branch = 1;
  a.t = {-0.1, 0, 0.1};
  a.points = {{0, -0.1}, {0, 0}, {0.1, 0.1}};
  SolutionCurve b;
  b.t = {0};
  b.points = {{0.5, 0.25}};
  std::ostringstream os;
  write_curves_csv(os, s, {a, b});
  const auto l = lines_of(os.str());
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[0], "curve_id,branch,t,u,v,x,y,z");
  EXPECT_EQ(l[1], "0,1,-0.10000000000000001,0,-0.10000000000000001,0,-0.10000000000000001,"
                  "-0.010000000000000002");
  EXPECT_EQ(l[4], "1,0,0,0.5,0.25,0.5,0.25,0.1875");
}

TEST(Render, PortraitSvgLayers) {
  const Generator g{testing::field("v^3/6"), testing::field("u^2/2 + v^4/24"), 2};
  const Surface s = to_u_axis_form(build_kth_kind(g));
  const Bde b = build_bde(s, BdeKind::kAs);
  PortraitSpec spec;
  spec.window = {-0.5, 0.5, -0.5, 0.5};
  spec.grid = 40;
  const auto seeds = portrait_seeds(b, spec.window, 3);
  IntegrationOptions opts;
  opts.max_len = 0.5;
  const auto curves = integrate_solutions(b, spec.window, seeds, opts);
  std::ostringstream os;
  write_portrait_svg(os, spec, s, b, curves, {{0, 0}, {3, 3}});
  const std::string svg = os.str();
  EXPECT_EQ(svg.rfind("<!-- frontal ", 0), 0u);
  for (const char* id : {"discriminant", "singular-set", "family-1", "family-2", "folded-points"}) {
    EXPECT_EQ(count(svg, std::string("id=\"") + id + "\""), 1u) << id;
  }
  EXPECT_EQ(count(svg, "<polyline"), curves.size());
  EXPECT_EQ(count(svg, "<circle"), 1u);  // (3, 3) lies outside the window
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");

  spec.families = false;
  spec.discriminant = false;
  std::ostringstream bare;
  write_portrait_svg(bare, spec, s, b, curves);
  EXPECT_EQ(count(bare.str(), "<polyline"), 0u);
  EXPECT_EQ(count(bare.str(), "id=\"discriminant\""), 0u);
}

TEST(Render, PortraitRejectsBadSpec) {
  const Surface s = testing::surface_from_text("x = u\ny = v\nz = u*v");
  PortraitSpec spec;
  spec.window = {1, 0, 0, 1};
  std::ostringstream os;
  EXPECT_THROW(write_portrait_svg(os, spec, s, build_bde(s, BdeKind::kAs), {}), Error);
}

TEST(Render, ObjMesh) {
  const Surface s = testing::surface_from_text("x = u\ny = v\nz = u*v");
  std::ostringstream os;
  write_obj_mesh(os, s, {0, 1, 0, 2}, 3, 4);
  const auto l = lines_of(os.str());
  ASSERT_EQ(l.size(), 1u + 12u + 2u * 2u * 3u);
  EXPECT_EQ(l[0].rfind("# frontal ", 0), 0u);
  EXPECT_NE(l[0].find("mesh 3x4"), std::string::npos);
  EXPECT_EQ(l[1], "v 0 0 0");
  EXPECT_EQ(l[12], "v 1 2 2");
  EXPECT_EQ(l[13], "f 1 2 5");
  EXPECT_EQ(l[14], "f 1 5 4");
  std::ostringstream again;
  write_obj_mesh(again, s, {0, 1, 0, 2}, 3, 4);
  EXPECT_EQ(os.str(), again.str());
  EXPECT_THROW(write_obj_mesh(again, s, {0, 1, 0, 2}, 1, 4), Error);
}

}  // namespace
}  // namespace frontal
