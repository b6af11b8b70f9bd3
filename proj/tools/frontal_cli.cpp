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

// frontal: command-line front end.
//
// Exit codes: 0 success, 2 input or parse error, 3 analysis error, 4 I/O.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frontal/bde.hpp"
#include "frontal/error.hpp"
#include "frontal/expr.hpp"
#include "frontal/frontal_analysis.hpp"
#include "frontal/normal_form.hpp"
#include "frontal/render.hpp"
#include "frontal/surface.hpp"

namespace {

using namespace frontal;

constexpr int kExitInput = 2;
constexpr int kExitAnalysis = 3;
constexpr int kExitIo = 4;

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kSyntaxError, std::string("bad number in ") + what + ": '" + item + "'");
    }
  }
  if (out.size() != n) {
    throw Error(ErrorCode::kSyntaxError, std::string(what) + " needs " + std::to_string(n) +
                                             " comma-separated numbers");
  }
  return out;
}

Rect parse_window(const std::string& text) {
  const auto w = parse_list(text, 4, "--window");
  Rect r{w[0], w[1], w[2], w[3]};
  if (!r.valid()) throw Error(ErrorCode::kSyntaxError, "--window must satisfy UMIN<UMAX, VMIN<VMAX");
  return r;
}

// A surface file, or a generator file turned into its normal form.
struct Loaded {
  Surface surface;
  std::optional<Generator> generator;
};

Loaded load_surface(const std::string& path) {
  ParsedFile pf = load_file(path);
  if (auto* sd = std::get_if<SurfaceDef>(&pf)) return {surface_from_def(*sd), std::nullopt};
  const auto& gd = std::get<GeneratorDef>(pf);
  Generator gen = generator_from_def(gd);
  return {build_kth_kind(gen, gd.order), gen};
}

GeneratorDef load_generator(const std::string& path) {
  ParsedFile pf = load_file(path);
  if (auto* gd = std::get_if<GeneratorDef>(&pf)) return *gd;
  throw Error(ErrorCode::kMissingKey, path + ": expected a generator file (keys g, h)");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  return os;
}

void close_out(std::ofstream& os, const std::string& path) {
  os.close();
  if (!os) throw Error(ErrorCode::kIo, "write to '" + path + "' failed");
}

// The tensor the foliation commands work with. Second-kind normal forms are
// moved to the u-axis presentation; lc and ch are divided by the identifier
// factor when they are v-divisible.
struct Prepared {
  Surface surface;
  Bde bde;
  std::vector<std::string> notes;
};

BdeKind parse_kind(const std::string& k) {
  if (k == "as") return BdeKind::kAs;
  if (k == "lc") return BdeKind::kLc;
  if (k == "ch") return BdeKind::kCh;
  throw Error(ErrorCode::kSyntaxError, "--bde must be as, lc or ch");
}

Prepared prepare(const Loaded& in, BdeKind kind, bool printed_lc) {
  Surface s = in.surface;
  std::vector<std::string> notes;
  const auto& info = s.normal_form();
  if (info && info->k == 2 && !info->u_axis) {
    s = to_u_axis_form(s);
    notes.emplace_back("u-axis presentation F(x, y) = -f(-y + x^2/2, x)");
  }
  Bde b = build_bde(s, kind, printed_lc ? LcVariant::kPrinted : LcVariant::kCorrected);
  if (kind == BdeKind::kAs) {
    b = reduce_by_identifier(b, s);
  } else {
    try {
      b = reduce_by_identifier(b, s);
      notes.emplace_back("divided by the identifier factor v");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotDivisible) throw;
      notes.emplace_back("tensor is not divisible by v; using it unreduced");
    }
  }
  return {s, b, notes};
}

int cmd_classify(const std::string& file, const std::string& point) {
  const Loaded in = load_surface(file);
  Point2 p = in.surface.base();
  if (!point.empty()) {
    const auto v = parse_list(point, 2, "-p");
    p = {v[0], v[1]};
  }
  const KindClassification kc = classify_point(in.surface, p);
  std::cout << kc.describe() << '\n';
  std::cout << "point: " << fmt17(p.u) << ',' << fmt17(p.v) << '\n';
  std::cout << "lambda: " << fmt17(kc.lambda) << '\n';
  std::cout << "grad lambda: " << fmt17(kc.grad_lambda.u) << ',' << fmt17(kc.grad_lambda.v) << '\n';
  if (kc.kind == PointKind::kKthKind) {
    if (kc.k >= 1 && kc.is_front) std::cout << "name: " << kind_name(kc.k) << '\n';
    std::cout << "phi derivatives:";
    for (double d : kc.phi_derivs) std::cout << ' ' << fmt17(d);
    std::cout << "\neta^i lambda:";
    for (double d : kc.eta_lambda) std::cout << ' ' << fmt17(d);
    std::cout << '\n';
  }
  return 0;
}

void print_invariants(const char* label, const Invariants& inv) {
  std::cout << label << ": kappa_nu=" << fmt17(inv.kappa_nu) << " mu_c=" << fmt17(inv.mu_c)
            << " tau_s=" << fmt17(inv.tau_s) << '\n';
}

int cmd_invariants(const std::string& file, const std::string& method) {
  const GeneratorDef gd = load_generator(file);
  const Generator gen = generator_from_def(gd);
  if (gen.k != 2) throw Error(ErrorCode::kWrongKind, "invariants are defined for k = 2");
  std::optional<Invariants> a, b;
  if (method == "coeffs" || method == "both") {
    const CoeffTable t = extract_coeffs(gen);
    a = invariants_from_coeffs(t);
    print_invariants("coefficients", *a);
  }
  if (method == "general" || method == "both") {
    BuildReport rep;
    const Surface s = build_kth_kind(gen, gd.order, &rep);
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
    b = invariants_general(s);
    print_invariants("general", *b);
  }
  if (a && b) {
    const double d = std::max({std::abs(a->kappa_nu - b->kappa_nu), std::abs(a->mu_c - b->mu_c),
                               std::abs(a->tau_s - b->tau_s)});
    std::cout << (d <= 1e-6 ? "routes agree" : "routes disagree") << " (max difference "
              << fmt17(d) << ")\n";
  }
  return 0;
}

int cmd_normal_form(const std::string& file, bool u_axis, const std::string& out) {
  const GeneratorDef gd = load_generator(file);
  BuildReport rep;
  Surface s = build_kth_kind(generator_from_def(gd), gd.order, &rep);
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << '\n';
  if (u_axis) s = to_u_axis_form(s);
  auto os = open_out(out);
  std::string comment = "normal form of kind " + std::to_string(gd.k) +
                        (rep.is_front ? " (front)" : " (not a front)");
  if (u_axis) comment += ", u-axis presentation";
  write_surface_file(os, s, std::min(s.order(), 8), comment);
  close_out(os, out);
  return 0;
}

int cmd_bde_info(const std::string& file, const std::string& kind, bool printed_lc) {
  const Loaded in = load_surface(file);
  const Prepared pr = prepare(in, parse_kind(kind), printed_lc);
  const Point2 o = pr.surface.base();
  std::cout << "bde: " << kind << (pr.bde.reduced ? " (reduced)" : "") << '\n';
  for (const auto& n : pr.notes) std::cout << "note: " << n << '\n';
  const Vec3 c = pr.bde.values(o);
  std::cout << "p,q,r(0): " << fmt17(c.x) << ',' << fmt17(c.y) << ',' << fmt17(c.z) << '\n';
  std::cout << "delta(0): " << fmt17(discriminant(pr.bde, o)) << '\n';
  try {
    const double A = coefficient_A(pr.bde.at(o, std::min(3, pr.bde.max_order)));
    const FoldedClass fc = classify_folded(A);
    std::cout << "A: " << fmt17(A) << '\n';
    std::cout << "l: " << fmt17(fc.l) << '\n';
    std::cout << "class: " << to_string(fc.type) << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotFoldedType) throw;
    std::cout << "A: not of folded type (" << e.detail() << ")\n";
  }
  const auto& info = in.surface.normal_form();
  if (info && info->k == 2 && kind != "lc") {
    const Invariants inv = invariants_general(in.surface);
    const SwallowtailFoliations sf = classify_swallowtail_foliations(in.surface, inv);
    std::cout << "sign_report: " << sf.sign_report << '\n';
  }
  return 0;
}

int cmd_foliate(const std::string& file, const std::string& kind, const std::string& window,
                int seeds, double step, double max_len, const std::string& out,
                const std::string& svg, bool printed_lc) {
  if (seeds < 1) throw Error(ErrorCode::kSyntaxError, "--seeds must be positive");
  if (!(step > 0)) throw Error(ErrorCode::kSyntaxError, "--step must be positive");
  const Rect w = parse_window(window);
  const Loaded in = load_surface(file);
  const Prepared pr = prepare(in, parse_kind(kind), printed_lc);
  const auto seed_pts = portrait_seeds(pr.bde, w, seeds);
  IntegrationOptions opts;
  opts.step = step;
  opts.max_len = max_len;
  const auto curves = integrate_solutions(pr.bde, w, seed_pts, opts);
  if (curves.empty()) {
    std::cerr << "warning: the discriminant is not positive anywhere on the seed grid; "
                 "no solution curves\n";
  }
  {
    auto os = open_out(out);
    write_curves_csv(os, pr.surface, curves);
    close_out(os, out);
  }
  if (!svg.empty()) {
    std::vector<Point2> folded;
    const Point2 o = pr.surface.base();
    try {
      coefficient_A(pr.bde.at(o, std::min(3, pr.bde.max_order)));
      folded.push_back(o);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotFoldedType) throw;
    }
    PortraitSpec spec;
    spec.window = w;
    auto os = open_out(svg);
    write_portrait_svg(os, spec, pr.surface, pr.bde, curves, folded);
    close_out(os, svg);
  }
  std::cout << "curves: " << curves.size() << " from " << seed_pts.size() << " seeds\n";
  return 0;
}

int cmd_mesh(const std::string& file, const std::string& window, const std::string& res,
             const std::string& out) {
  const Rect w = parse_window(window);
  const auto x = res.find('x');
  int nx = 0, ny = 0;
  try {
    if (x == std::string::npos) throw std::invalid_argument(res);
    std::size_t a = 0, b = 0;
    nx = std::stoi(res.substr(0, x), &a);
    ny = std::stoi(res.substr(x + 1), &b);
    if (a != x || b != res.size() - x - 1) throw std::invalid_argument(res);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kSyntaxError, "--res must look like NXxNY");
  }
  if (nx < 2 || ny < 2) throw Error(ErrorCode::kSyntaxError, "--res needs at least 2x2");
  const Loaded in = load_surface(file);
  auto os = open_out(out);
  write_obj_mesh(os, in.surface, w, nx, ny);
  close_out(os, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularities of frontal surfaces: classification, normal forms and "
               "foliations near swallowtails"};
  app.set_version_flag("--version", std::string(FRONTAL_VERSION));
  app.require_subcommand(1);

  std::string file, point, method = "both", out, kind, window, svg, res;
  bool u_axis = false, printed_lc = false;
  int seeds = 8;
  double step = 0.01, max_len = 2.0;

  auto* classify = app.add_subcommand("classify", "Classify a point of a surface");
  classify->add_option("-s,--surface", file, "surface or generator file")->required();
  classify->add_option("-p,--point", point, "U,V (default: the file's point)");

  auto* inv = app.add_subcommand("invariants", "kappa_nu, mu_c, tau_s of a generator pair");
  inv->add_option("-g,--generator", file, "generator file")->required();
  inv->add_option("--method", method, "coeffs|general|both")
      ->check(CLI::IsMember({"coeffs", "general", "both"}));

  auto* nf = app.add_subcommand("normal-form", "Write the normal form of a generator pair");
  nf->add_option("-g,--generator", file, "generator file")->required();
  nf->add_flag("--u-axis", u_axis, "singular set on the u-axis");
  nf->add_option("-o,--out", out, "output surface file")->required();

  auto* info = app.add_subcommand("bde-info", "Discriminant and folded type of a BDE at the point");
  info->add_option("-s,--surface", file, "surface or generator file")->required();
  info->add_option("--bde", kind, "as|ch|lc")->required();
  info->add_flag("--lc-printed", printed_lc, "use (EN - FL) as the lc dv^2 coefficient");

  auto* fol = app.add_subcommand("foliate", "Integrate BDE solution curves");
  fol->add_option("-s,--surface", file, "surface or generator file")->required();
  fol->add_option("--bde", kind, "as|ch|lc")->required();
  fol->add_option("--window", window, "UMIN,UMAX,VMIN,VMAX")->required();
  fol->add_option("--seeds", seeds, "seed grid size per side");
  fol->add_option("--step", step, "maximum integration step");
  fol->add_option("--max-len", max_len, "maximum arclength per direction");
  fol->add_option("--out", out, "CSV output")->required();
  fol->add_option("--svg", svg, "SVG portrait output");
  fol->add_flag("--lc-printed", printed_lc, "use (EN - FL) as the lc dv^2 coefficient");

  auto* mesh = app.add_subcommand("mesh", "Write an OBJ mesh of a surface");
  mesh->add_option("-s,--surface", file, "surface or generator file")->required();
  mesh->add_option("--window", window, "UMIN,UMAX,VMIN,VMAX")->required();
  mesh->add_option("--res", res, "NXxNY vertices")->required();
  mesh->add_option("-o,--out", out, "OBJ output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*classify) return cmd_classify(file, point);
    if (*inv) return cmd_invariants(file, method);
    if (*nf) return cmd_normal_form(file, u_axis, out);
    if (*info) return cmd_bde_info(file, kind, printed_lc);
    if (*fol) return cmd_foliate(file, kind, window, seeds, step, max_len, out, svg, printed_lc);
    if (*mesh) return cmd_mesh(file, window, res, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::kIo) return kExitIo;
    return is_input_error(e.code()) ? kExitInput : kExitAnalysis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAnalysis;
  }
  return 0;
}
