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

#include "frontal/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <unordered_map>

namespace frontal {
namespace {

std::string where(Span s) {
  return "line " + std::to_string(s.line) + ":" + std::to_string(s.column);
}

[[noreturn]] void fail(ErrorCode code, Span s, const std::string& msg) {
  throw Error(code, where(s) + ": " + msg);
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct Token {
  enum class Type { kNumber, kIdent, kOp, kEnd };
  Type type = Type::kEnd;
  std::string text;
  double number = 0.0;
  bool integral = false;
  Span span;
};

class Lexer {
 public:
  Lexer(std::string_view text, int line, int col0)
      : text_(text), line_(line), col0_(col0) {}

  Token next() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    Token t;
    t.span = {line_, col0_ + static_cast<int>(pos_) + 1};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      bool integral = true;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '.') {
        integral = false;
        ++pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          ++pos_;
        }
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t q = pos_ + 1;
        if (q < text_.size() && (text_[q] == '+' || text_[q] == '-')) ++q;
        if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
          integral = false;
          pos_ = q;
          while (pos_ < text_.size() &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
          }
        }
      }
      t.type = Token::Type::kNumber;
      t.text = std::string(text_.substr(start, pos_ - start));
      if (t.text == ".") fail(ErrorCode::kSyntaxError, t.span, "malformed number");
      t.number = std::strtod(t.text.c_str(), nullptr);
      t.integral = integral;
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      t.type = Token::Type::kIdent;
      t.text = std::string(text_.substr(start, pos_ - start));
      return t;
    }
    if (std::string_view("+-*/^(),").find(c) != std::string_view::npos) {
      ++pos_;
      t.type = Token::Type::kOp;
      t.text = std::string(1, c);
      return t;
    }
    fail(ErrorCode::kSyntaxError, t.span,
         std::string("unexpected character '") + c + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int col0_;
};

std::shared_ptr<Expr> make(Expr::Kind kind, Span span) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->span = span;
  return e;
}

class Parser {
 public:
  Parser(std::string_view text, const Definitions& defs, int line, int col0)
      : lex_(text, line, col0), defs_(defs) {
    advance();
  }

  ExprPtr parse_full() {
    ExprPtr e = parse_expr();
    if (tok_.type != Token::Type::kEnd) {
      fail(ErrorCode::kSyntaxError, tok_.span,
           "unexpected '" + tok_.text + "' after expression");
    }
    return e;
  }

 private:
  void advance() { tok_ = lex_.next(); }
  bool is_op(char c) const {
    return tok_.type == Token::Type::kOp && tok_.text[0] == c;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (is_op('+') || is_op('-')) {
      auto node = make(is_op('+') ? Expr::Kind::kAdd : Expr::Kind::kSub,
                       tok_.span);
      advance();
      node->lhs = lhs;
      node->rhs = parse_term();
      lhs = node;
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (is_op('*') || is_op('/')) {
      auto node = make(is_op('*') ? Expr::Kind::kMul : Expr::Kind::kDiv,
                       tok_.span);
      advance();
      node->lhs = lhs;
      node->rhs = parse_unary();
      lhs = node;
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (is_op('-')) {
      auto node = make(Expr::Kind::kNeg, tok_.span);
      advance();
      node->lhs = parse_unary();
      return node;
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_primary();
    while (is_op('^')) {
      auto node = make(Expr::Kind::kPow, tok_.span);
      advance();
      if (tok_.type != Token::Type::kNumber) {
        if (is_op('-') || tok_.type == Token::Type::kIdent || is_op('(')) {
          fail(ErrorCode::kNonIntegerExponent, tok_.span,
               "exponent must be a non-negative integer literal");
        }
        fail(ErrorCode::kSyntaxError, tok_.span, "expected exponent after '^'");
      }
      if (!tok_.integral || tok_.number > 64) {
        fail(ErrorCode::kNonIntegerExponent, tok_.span,
             "exponent '" + tok_.text + "' is not a small non-negative integer");
      }
      node->exponent = static_cast<int>(tok_.number);
      node->lhs = base;
      advance();
      base = node;
    }
    return base;
  }

  ExprPtr parse_primary() {
    const Span span = tok_.span;
    if (tok_.type == Token::Type::kNumber) {
      auto node = make(Expr::Kind::kLiteral, span);
      node->value = tok_.number;
      advance();
      return node;
    }
    if (is_op('(')) {
      advance();
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (tok_.type == Token::Type::kIdent) {
      const std::string name = tok_.text;
      advance();
      if (name == "u" || name == "v") {
        auto node = make(Expr::Kind::kVar, span);
        node->var = name[0];
        return node;
      }
      if (name == "pi") {
        auto node = make(Expr::Kind::kLiteral, span);
        node->value = std::numbers::pi;
        return node;
      }
      static const std::map<std::string, Expr::Func, std::less<>> kFuncs = {
          {"sin", Expr::Func::kSin},
          {"cos", Expr::Func::kCos},
          {"exp", Expr::Func::kExp},
          {"sqrt", Expr::Func::kSqrt}};
      if (auto f = kFuncs.find(name); f != kFuncs.end()) {
        if (!is_op('(')) {
          fail(ErrorCode::kSyntaxError, tok_.span,
               "expected '(' after function " + name);
        }
        advance();
        auto node = make(Expr::Kind::kCall, span);
        node->func = f->second;
        node->lhs = parse_expr();
        expect(')');
        return node;
      }
      auto d = defs_.find(name);
      if (d == defs_.end()) {
        fail(ErrorCode::kUndefinedName, span, "undefined name '" + name + "'");
      }
      auto node = make(Expr::Kind::kRef, span);
      node->name = name;
      node->lhs = d->second;
      return node;
    }
    if (tok_.type == Token::Type::kEnd) {
      fail(ErrorCode::kSyntaxError, span, "expected operand at end of input");
    }
    fail(ErrorCode::kSyntaxError, span, "expected operand, found '" + tok_.text + "'");
  }

  void expect(char c) {
    if (!is_op(c)) {
      fail(ErrorCode::kSyntaxError, tok_.span,
           std::string("expected '") + c + "'" +
               (tok_.type == Token::Type::kEnd ? " at end of input" : ""));
    }
    advance();
  }

  Lexer lex_;
  const Definitions& defs_;
  Token tok_;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::kAdd:
    case Expr::Kind::kSub:
      return 1;
    case Expr::Kind::kMul:
    case Expr::Kind::kDiv:
      return 2;
    case Expr::Kind::kNeg:
      return 3;
    case Expr::Kind::kPow:
      return 4;
    default:
      return 5;
  }
}

void print(const Expr& e, std::string& out) {
  auto wrapped = [&out](const Expr& sub, bool parens) {
    if (parens) out += '(';
    print(sub, out);
    if (parens) out += ')';
  };
  switch (e.kind) {
    case Expr::Kind::kVar:
      out += e.var;
      return;
    case Expr::Kind::kLiteral:
      out += format_double(e.value);
      return;
    case Expr::Kind::kRef:
      out += e.name;
      return;
    case Expr::Kind::kCall: {
      static const char* kNames[] = {"sin", "cos", "exp", "sqrt"};
      out += kNames[static_cast<int>(e.func)];
      wrapped(*e.lhs, true);
      return;
    }
    case Expr::Kind::kNeg:
      out += '-';
      wrapped(*e.lhs, precedence(*e.lhs) < 3);
      return;
    case Expr::Kind::kPow:
      wrapped(*e.lhs, precedence(*e.lhs) < 5);
      out += '^';
      out += std::to_string(e.exponent);
      return;
    default: {
      const int p = precedence(e);
      static const char kOps[] = {'+', '-', '*', '/'};
      const char op = kOps[static_cast<int>(e.kind) - static_cast<int>(Expr::Kind::kAdd)];
      wrapped(*e.lhs, precedence(*e.lhs) < p);
      out += ' ';
      out += op;
      out += ' ';
      wrapped(*e.rhs, precedence(*e.rhs) <= p);
      return;
    }
  }
}

class Evaluator {
 public:
  Evaluator(Point2 base, int order) : base_(base), order_(order) {}

  Jet2 eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::kVar:
        return e.var == 'u' ? Jet2::u_var(order_, base_)
                            : Jet2::v_var(order_, base_);
      case Expr::Kind::kLiteral:
        return Jet2::constant(e.value, order_, base_);
      case Expr::Kind::kRef: {
        auto it = memo_.find(e.lhs.get());
        if (it != memo_.end()) return it->second;
        Jet2 r = eval(*e.lhs);
        memo_.emplace(e.lhs.get(), r);
        return r;
      }
      case Expr::Kind::kNeg:
        return -eval(*e.lhs);
      case Expr::Kind::kAdd:
        return eval(*e.lhs) + eval(*e.rhs);
      case Expr::Kind::kSub:
        return eval(*e.lhs) - eval(*e.rhs);
      case Expr::Kind::kMul:
        return eval(*e.lhs) * eval(*e.rhs);
      case Expr::Kind::kDiv: {
        Jet2 num = eval(*e.lhs);
        Jet2 den = eval(*e.rhs);
        return annotate(e, [&] { return divide(num, den); });
      }
      case Expr::Kind::kPow: {
        Jet2 b = eval(*e.lhs);
        return pow(b, e.exponent);
      }
      case Expr::Kind::kCall: {
        Jet2 arg = eval(*e.lhs);
        switch (e.func) {
          case Expr::Func::kSin: return sin(arg);
          case Expr::Func::kCos: return cos(arg);
          case Expr::Func::kExp: return exp(arg);
          case Expr::Func::kSqrt:
            return annotate(e, [&] { return sqrt(arg); });
        }
      }
    }
    throw Error(ErrorCode::kContractViolation, "unknown expression node");
  }

 private:
  template <class F>
  Jet2 annotate(const Expr& e, F&& f) {
    try {
      return f();
    } catch (const Error& err) {
      throw Error(err.code(), where(e.span) + ": " + err.detail());
    }
  }

  Point2 base_;
  int order_;
  std::unordered_map<const Expr*, Jet2> memo_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits on commas outside parentheses; returns (offset, piece) pairs.
std::vector<std::pair<int, std::string_view>> split_commas(std::string_view s,
                                                           int offset) {
  std::vector<std::pair<int, std::string_view>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || (s[i] == ',' && depth == 0)) {
      out.emplace_back(offset + static_cast<int>(start), s.substr(start, i - start));
      start = i + 1;
    } else if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    }
  }
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool has_variables(const Expr& e) {
  if (e.kind == Expr::Kind::kVar) return true;
  if (e.lhs && has_variables(*e.lhs)) return true;
  return e.rhs && has_variables(*e.rhs);
}

}  // namespace

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::kVar:
      return a.var == b.var;
    case Expr::Kind::kLiteral:
      return a.value == b.value;
    case Expr::Kind::kRef:
      return a.name == b.name;
    case Expr::Kind::kNeg:
      return same_tree(*a.lhs, *b.lhs);
    case Expr::Kind::kPow:
      return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    case Expr::Kind::kCall:
      return a.func == b.func && same_tree(*a.lhs, *b.lhs);
    default:
      return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

ExprPtr parse_expression(std::string_view text, const Definitions& defs,
                         int line) {
  Parser p(text, defs, line, 0);
  return p.parse_full();
}

Jet2 eval_jet(const Expr& e, Point2 base, int order) {
  Evaluator ev(base, order);
  return ev.eval(e);
}

double eval_value(const Expr& e, Point2 at) { return eval_jet(e, at, 0).value(); }

int default_jet_order() {
  if (const char* env = std::getenv("FRONTAL_JET_ORDER")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n >= 1 && n <= Jet2::kMaxOrder) {
      return static_cast<int>(n);
    }
  }
  return Jet2::kDefaultOrder;
}

ParsedFile parse_file(std::string_view text) {
  Definitions defs;
  std::map<std::string, ExprPtr, std::less<>> keys;
  std::map<std::string, Span, std::less<>> key_spans;
  std::optional<std::array<ExprPtr, 3>> normal;
  std::optional<Point2> point;
  std::optional<int> order;
  std::optional<int> k;
  static const std::set<std::string, std::less<>> kExprKeys = {"x", "y", "z", "g", "h"};

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos <= text.size();) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    lines.push_back(text.substr(pos, eol - pos));
    pos = eol + 1;
  }
  int line_no = 0;
  for (std::string_view raw : lines) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) continue;
    const std::size_t eq = raw.find('=');
    const Span line_span{line_no, 1};
    if (eq == std::string_view::npos) {
      fail(ErrorCode::kSyntaxError, line_span, "expected 'key = expression'");
    }
    const bool is_def = eq > 0 && raw[eq - 1] == ':';
    std::string_view lhs = trim(raw.substr(0, is_def ? eq - 1 : eq));
    std::string_view rhs = raw.substr(eq + 1);
    const int rhs_col = static_cast<int>(eq + 1);
    const Span key_span{line_no,
                        static_cast<int>(lhs.data() - raw.data()) + 1};
    if (!is_identifier(lhs)) {
      fail(ErrorCode::kSyntaxError, key_span, "invalid key '" + std::string(lhs) + "'");
    }
    auto parse_piece = [&](std::string_view piece, int col) {
      Parser p(piece, defs, line_no, col);
      return p.parse_full();
    };
    const std::string key(lhs);
    if (is_def) {
      if (key == "u" || key == "v" || key == "pi" || key == "sin" ||
          key == "cos" || key == "exp" || key == "sqrt") {
        fail(ErrorCode::kSyntaxError, key_span, "cannot redefine '" + key + "'");
      }
      if (defs.count(key)) {
        fail(ErrorCode::kSyntaxError, key_span, "name '" + key + "' defined twice");
      }
      defs[key] = parse_piece(rhs, rhs_col);
      continue;
    }
    if (key_spans.count(key)) {
      fail(ErrorCode::kSyntaxError, key_span, "key '" + key + "' given twice");
    }
    key_spans[key] = key_span;
    if (kExprKeys.count(key)) {
      keys[key] = parse_piece(rhs, rhs_col);
    } else if (key == "normal") {
      auto parts = split_commas(rhs, rhs_col);
      if (parts.size() != 3) {
        fail(ErrorCode::kSyntaxError, key_span,
             "normal needs three comma-separated expressions");
      }
      std::array<ExprPtr, 3> n;
      for (int i = 0; i < 3; ++i) {
        n[static_cast<std::size_t>(i)] = parse_piece(parts[static_cast<std::size_t>(i)].second,
                                                     parts[static_cast<std::size_t>(i)].first);
      }
      normal = n;
    } else if (key == "point") {
      auto parts = split_commas(rhs, rhs_col);
      if (parts.size() != 2) {
        fail(ErrorCode::kSyntaxError, key_span, "point needs two comma-separated numbers");
      }
      double c[2];
      for (int i = 0; i < 2; ++i) {
        ExprPtr e = parse_piece(parts[static_cast<std::size_t>(i)].second,
                                parts[static_cast<std::size_t>(i)].first);
        if (has_variables(*e)) {
          fail(ErrorCode::kSyntaxError, e->span, "point coordinates must be constants");
        }
        c[i] = eval_value(*e, {});
      }
      point = Point2{c[0], c[1]};
    } else if (key == "order" || key == "k") {
      ExprPtr e = parse_piece(rhs, rhs_col);
      const bool ok = e->kind == Expr::Kind::kLiteral &&
                      e->value == std::floor(e->value);
      const int lo = key == "order" ? 1 : 2;
      const int hi = key == "order" ? Jet2::kMaxOrder : 10;
      if (!ok || e->value < lo || e->value > hi) {
        fail(ErrorCode::kSyntaxError, e->span,
             key + " must be an integer in [" + std::to_string(lo) + ", " +
                 std::to_string(hi) + "]");
      }
      (key == "order" ? order : k) = static_cast<int>(e->value);
    } else {
      fail(ErrorCode::kSyntaxError, key_span, "unknown key '" + key + "'");
    }
  }

  const bool surface_keys = keys.count("x") || keys.count("y") || keys.count("z") ||
                            normal.has_value();
  const bool generator_keys = keys.count("g") || keys.count("h") || k.has_value();
  if (surface_keys && generator_keys) {
    throw Error(ErrorCode::kConflictingKeys,
                "file mixes surface keys (x, y, z, normal) with generator keys (g, h, k)");
  }
  const int ord = order.value_or(default_jet_order());
  if (generator_keys) {
    for (const char* name : {"g", "h"}) {
      if (!keys.count(name)) {
        throw Error(ErrorCode::kMissingKey, std::string("generator file lacks '") + name + "'");
      }
    }
    GeneratorDef gd;
    gd.g = keys["g"];
    gd.h = keys["h"];
    gd.k = k.value_or(2);
    gd.base = point.value_or(Point2{});
    gd.order = ord;
    gd.definitions = std::move(defs);
    return gd;
  }
  for (const char* name : {"x", "y", "z"}) {
    if (!keys.count(name)) {
      throw Error(ErrorCode::kMissingKey, std::string("surface file lacks '") + name + "'");
    }
  }
  SurfaceDef sd;
  sd.x = keys["x"];
  sd.y = keys["y"];
  sd.z = keys["z"];
  sd.normal = normal;
  sd.base = point.value_or(Point2{});
  sd.order = ord;
  sd.definitions = std::move(defs);
  return sd;
}

ParsedFile load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_file(ss.str());
}

}  // namespace frontal
