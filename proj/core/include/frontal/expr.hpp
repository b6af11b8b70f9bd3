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

// Expression DSL for surfaces and generator pairs.
//
// Grammar (whitespace-insensitive):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)*
//   primary := NUMBER | 'u' | 'v' | 'pi' | NAME | FUNC '(' expr ')'
//            | '(' expr ')'
//   FUNC    := sin | cos | exp | sqrt
//
// '^' binds tighter than unary minus, so -v^2 is -(v^2).

#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "frontal/jet.hpp"

namespace frontal {

struct Span {
  int line = 0;
  int column = 0;  // 1-based
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { kVar, kLiteral, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall, kRef };
  enum class Func { kSin, kCos, kExp, kSqrt };

  Kind kind = Kind::kLiteral;
  char var = 'u';           // kVar
  double value = 0.0;       // kLiteral
  int exponent = 0;         // kPow
  Func func = Func::kSin;   // kCall
  std::string name;         // kRef
  ExprPtr lhs;              // operand / left / base / call argument / ref target
  ExprPtr rhs;              // right operand
  Span span;
};

// Structural equality; spans are ignored and references compare by name.
bool same_tree(const Expr& a, const Expr& b);

// Prints with the minimal parentheses that reproduce the same tree on reparse.
std::string to_string(const Expr& e);

using Definitions = std::map<std::string, ExprPtr, std::less<>>;

// Parses one expression. Names resolve against defs; unknown names raise
// kUndefinedName. line is used for error positions only.
ExprPtr parse_expression(std::string_view text, const Definitions& defs = {},
                         int line = 1);

// Jet of e at base. Shared sub-expressions (named references) are evaluated
// once per call. Jet errors are rethrown with the source position.
Jet2 eval_jet(const Expr& e, Point2 base, int order);
double eval_value(const Expr& e, Point2 at);

struct SurfaceDef {
  ExprPtr x, y, z;
  std::optional<std::array<ExprPtr, 3>> normal;
  Point2 base{};
  int order = Jet2::kDefaultOrder;
  Definitions definitions;
};

struct GeneratorDef {
  ExprPtr g, h;
  int k = 2;
  Point2 base{};
  int order = Jet2::kDefaultOrder;
  Definitions definitions;
};

using ParsedFile = std::variant<SurfaceDef, GeneratorDef>;

// Line-oriented "key = expr" / "name := expr" format with '#' comments.
// Surface keys: x, y, z, normal (three expressions), order, point.
// Generator keys: g, h, k, order, point. order defaults to default_jet_order().
ParsedFile parse_file(std::string_view text);
ParsedFile load_file(const std::string& path);

// Default jet order: FRONTAL_JET_ORDER when set to an integer in [1, 12],
// otherwise 8.
int default_jet_order();

}  // namespace frontal
