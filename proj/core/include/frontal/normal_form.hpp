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

// Normal forms of k-th-kind singular points built from a generator pair
// (g, h), their invariants and coefficient tables.
//
// For k >= 2 the surface is
//
//   f = (u, F_k[g], F_k[h]),
//   F_k[g] = (v^k/k! - u) d_v^k g + sum_{i=1..k} (-1)^i v^(k-i)/(k-i)! d_v^(k-i) g,
//
// whose singular set is {u = v^k/k!} with null direction d_v there. The
// normal is nu2 = (h1 f2_u - g1 f3_u, -h1, g1) with g1 = d_v^(k+1) g.

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "frontal/expr.hpp"
#include "frontal/surface.hpp"

namespace frontal {

struct Monomial {
  int i = 0;  // power of u
  int j = 0;  // power of v
  double c = 0;
};

// Polynomial sum c u^i v^j as a jet-evaluable field.
ScalarField polynomial_field(std::vector<Monomial> terms);

struct Generator {
  ScalarField g;
  ScalarField h;
  int k = 2;
};

Generator generator_from_def(const GeneratorDef& def);

struct BuildReport {
  std::vector<std::string> warnings;  // failed normalization predicates
  double front_determinant = 0;       // det(g1, g2; h1, h2)(0)
  bool is_front = false;
};

// Throws kNotKthKind (kNotSecondKind for k = 2) when
// (d_v^(k+1) g, d_v^(k+1) h)(0) = (0, 0). The working order is capped at
// 11 - k so every jet stays within the kernel's order limit.
Surface build_kth_kind(const Generator& gen, int order = Jet2::kDefaultOrder,
                       BuildReport* report = nullptr);
Surface build_second_kind(ScalarField g, ScalarField h,
                          int order = Jet2::kDefaultOrder,
                          BuildReport* report = nullptr);

// F(x, y) = -f(-y + x^2/2, x) for a second-kind normal form f; the singular
// set becomes the u-axis with null field d_u + u d_v. Throws kWrongInputForm.
Surface to_u_axis_form(const Surface& s);

struct CoeffTable {
  // a[i][j] = d^(i+j) g / du^i dv^j (0), i + j <= 5; b likewise for h.
  std::array<std::array<double, 6>, 6> a{};
  std::array<std::array<double, 6>, 6> b{};

  struct Predicates {
    bool g_zero = false;      // g(0) = 0
    bool h_zero = false;      // h(0) = 0
    bool g_balanced = false;  // g_u(0) = g_vv(0)
    bool h_balanced = false;  // h_u(0) = h_vv(0)
    bool h3_zero = false;     // h_vvv(0) = 0
    bool g3_positive = false; // g_vvv(0) > 0
    bool all() const {
      return g_zero && h_zero && g_balanced && h_balanced && h3_zero && g3_positive;
    }
  } predicates;

  std::vector<std::string> failed_predicates() const;
};

CoeffTable extract_coeffs(const Generator& gen);

// 4-jets of the y and z components of a second-kind normal form at 0.
struct FourJets {
  Jet2 y;
  Jet2 z;
};
FourJets expansion_coefficients(const Surface& s);
// The same 4-jets predicted in closed form from the coefficient table of a
// normalized generator pair.
FourJets closed_form_four_jets(const CoeffTable& t);

struct Invariants {
  enum class Route { kCoefficients, kGeneral };
  double kappa_nu = 0;
  double mu_c = 0;
  double tau_s = 0;
  Route route = Route::kCoefficients;
};

// (kappa_nu, mu_c, tau_s) = (-2 b12 + b20, b04 / a03^2, 2 a03).
// Throws kNotNormalized when a predicate fails.
Invariants invariants_from_coeffs(const CoeffTable& t);

// Direct evaluation at the base point of a second-kind singular point:
//   kappa_nu = lim <gamma_hat'', nu> / |gamma_hat'|^2 along the singular curve,
//   mu_c     = -|f_U|^3 <f_UV, nu_V> / |f_UV x f_U|^2 with ker df = <d_V>,
//   tau_s    = det(gamma_hat'', gamma_hat''', nu) / |gamma_hat''|^(5/2).
// Orientation: U is chosen with <f_U, gamma_hat''> < 0 and gamma with
// phi'(0) psi'(0) < 0, psi = (eta lambda) o gamma for the unit normal.
// Throws kWrongKind unless the base point is of the second kind.
Invariants invariants_general(const Surface& s);

struct LimitResult {
  bool finite = false;
  double value = 0;
  int numerator_order = -1;
  int denominator_order = -1;
};
// The kappa_nu limit with either |gamma_hat'|^2 (velocity) or |gamma_hat|^2
// (position, measured from the image of the base point) as denominator.
LimitResult kappa_nu_limit(const Surface& s, bool position_denominator);

// Writes s in the surface file format with polynomial components expanded
// from jets at the base point to the given order, 17 significant digits.
void write_surface_file(std::ostream& os, const Surface& s, int order,
                        const std::string& comment = {});

}  // namespace frontal
