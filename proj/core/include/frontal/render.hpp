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

// Emitters: solution curves as CSV, (u, v)-domain portraits as SVG and
// surface meshes as OBJ. Numbers are printed with 17 significant digits.

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "frontal/bde.hpp"
#include "frontal/frontal_analysis.hpp"
#include "frontal/surface.hpp"

namespace frontal {

std::string fmt17(double x);

struct PortraitSpec {
  Rect window;
  int width = 800;
  int height = 800;
  int grid = 160;  // marching-squares cells per side for the contour layers
  bool singular_set = true;
  bool discriminant = true;
  bool families = true;
  bool folded_points = true;
  double line_width = 1.0;
  std::array<std::string, 2> family_colors{"#1f77b4", "#d62728"};

  // Throws kContractViolation on an empty window or non-positive size.
  void validate() const;
};

// Header curve_id,branch,t,u,v,x,y,z; (x, y, z) = f(u, v).
void write_curves_csv(std::ostream& os, const Surface& s,
                      const std::vector<SolutionCurve>& curves);

// Layers: discriminant (dashed), singular set (bold), the two root families
// and folded points. The first line is a version comment.
void write_portrait_svg(std::ostream& os, const PortraitSpec& spec, const Surface& s,
                        const Bde& b, const std::vector<SolutionCurve>& curves,
                        const std::vector<Point2>& folded = {});

// Regular nx x ny vertex grid over the window, two triangles per cell.
void write_obj_mesh(std::ostream& os, const Surface& s, const Rect& window, int nx, int ny);

}  // namespace frontal
