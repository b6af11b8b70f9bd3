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

#include "frontal/surface.hpp"

namespace frontal {

ScalarField field_from_expr(ExprPtr e) {
  return [e = std::move(e)](Point2 p, int order) { return eval_jet(*e, p, order); };
}

Surface surface_from_def(const SurfaceDef& def) {
  const ExprPtr x = def.x, y = def.y, z = def.z;
  VectorField map = [x, y, z](Point2 p, int order) {
    return JetVec3{eval_jet(*x, p, order), eval_jet(*y, p, order),
                   eval_jet(*z, p, order)};
  };
  std::optional<VectorField> normal;
  int normal_max = Jet2::kMaxOrder;
  if (def.normal) {
    const auto n = *def.normal;
    normal = [n](Point2 p, int order) {
      return JetVec3{eval_jet(*n[0], p, order), eval_jet(*n[1], p, order),
                     eval_jet(*n[2], p, order)};
    };
    if (norm(JetVec3{eval_jet(*n[0], def.base, 0), eval_jet(*n[1], def.base, 0),
                     eval_jet(*n[2], def.base, 0)}
                 .value()) == 0.0) {
      throw Error(ErrorCode::kNormalRequired, "normal field vanishes at the base point");
    }
  } else {
    normal = synthesize_normal(map, Jet2::kMaxOrder, def.base);
    normal_max = Jet2::kMaxOrder - 2;
  }
  return Surface(map, Jet2::kMaxOrder, normal, normal_max, def.base, def.order);
}

}  // namespace frontal
