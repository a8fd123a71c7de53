// Copyright 2026 hweyl developers
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

// Command-line front end: point/weight set dumps, family evaluation,
// transform matrices, forward/backward transforms, orthogonality audits,
// the interpolation experiment, contour sampling and the spring-lattice
// frequency tables.  All outputs are machine-readable CSV or JSON and
// deterministic for identical inputs.

#include <array>
#include <chrono>
#include <complex>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hweyl/hweyl.hpp"

namespace {

using hweyl::CoeffPreset;
using hweyl::FamilyKind;
using hweyl::HoneycombFamily;
using hweyl::KernelFamily;
using hweyl::OmegaVector;
using hweyl::PointSetKind;
using hweyl::Sign;
using hweyl::Weight;
namespace io = hweyl::io;

struct OutputOptions {
  std::string format = "csv";
  std::string out;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "write output to this file (default stdout)");
}

/// Runs the writer against --out or stdout.
template <class Writer>
void with_output(const OutputOptions& o, Writer&& write) {
  if (o.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw hweyl::Error("cannot open output file '" + o.out + "'");
  write(f);
}

void emit_json(const OutputOptions& o, const io::json& j) {
  with_output(o, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
}

struct FamilyOptions {
  int M = 4;
  std::string kind = "C";
  std::string kernel = "hartley";
  std::string type = "1";
  std::string coeffs_path;
  std::string dump_coeffs;
};

void add_family_options(CLI::App* cmd, FamilyOptions& o) {
  cmd->add_option("--M", o.M, "resolution")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--kind", o.kind, "family kind")
      ->check(CLI::IsMember({"C", "S"}))
      ->capture_default_str();
  cmd->add_option("--kernel", o.kernel, "kernel flavour")
      ->check(CLI::IsMember({"fourier", "hartley"}))
      ->capture_default_str();
  cmd->add_option("--type", o.type, "coefficient choice")
      ->check(CLI::IsMember({"1", "2", "3", "file"}))
      ->capture_default_str();
  cmd->add_option("--coeffs", o.coeffs_path,
                  "coefficient JSON (required with --type file)");
  cmd->add_option("--dump-coeffs", o.dump_coeffs,
                  "also write the family's coefficient table to this JSON file");
}

FamilyKind parse_kind(const std::string& s) {
  return s == "C" ? FamilyKind::C : FamilyKind::S;
}
KernelFamily parse_kernel(const std::string& s) {
  return s == "fourier" ? KernelFamily::Fourier : KernelFamily::Hartley;
}

HoneycombFamily build_family(const FamilyOptions& o) {
  const FamilyKind kind = parse_kind(o.kind);
  const KernelFamily kernel = parse_kernel(o.kernel);
  std::optional<HoneycombFamily> fam;
  if (o.type == "file") {
    if (o.coeffs_path.empty())
      throw hweyl::DomainError("--type file requires --coeffs <path>");
    std::ifstream f(o.coeffs_path);
    if (!f)
      throw hweyl::Error("cannot open coefficient file '" + o.coeffs_path +
                         "'");
    const io::CoeffFile cf = io::read_coeffs_json(f);
    if (cf.M != o.M || cf.kind != kind)
      throw hweyl::DimensionMismatchError(
          "coefficient file M/kind do not match the flags");
    fam = HoneycombFamily::from_pairs(kind, kernel, o.M, cf.entries);
  } else {
    fam = HoneycombFamily(kind, kernel, o.M,
                          static_cast<CoeffPreset>(std::stoi(o.type)));
  }
  if (!o.dump_coeffs.empty()) {
    std::ofstream f(o.dump_coeffs);
    if (!f)
      throw hweyl::Error("cannot open coefficient output '" + o.dump_coeffs +
                         "'");
    f << io::coeffs_to_json(*fam).dump(2) << '\n';
  }
  return std::move(*fam);
}

PointSetKind parse_point_set(const std::string& s) {
  if (s == "FPM") return PointSetKind::FPM;
  if (s == "FQM") return PointSetKind::FQM;
  if (s == "HM") return PointSetKind::HM;
  if (s == "HM1") return PointSetKind::HM1;
  if (s == "HM2") return PointSetKind::HM2;
  if (s == "FPM_interior") return PointSetKind::FPMInterior;
  if (s == "FQM_interior") return PointSetKind::FQMInterior;
  if (s == "HM_interior") return PointSetKind::HMInterior;
  throw hweyl::DomainError("unknown point set '" + s + "'");
}

hweyl::WeightSetKind parse_weight_set(const std::string& s) {
  using hweyl::WeightSetKind;
  if (s == "LQM") return WeightSetKind::LambdaQM;
  if (s == "LPM") return WeightSetKind::LambdaPM;
  if (s == "LM") return WeightSetKind::LM;
  if (s == "LQM_interior") return WeightSetKind::LambdaQMInterior;
  if (s == "LPM_interior") return WeightSetKind::LambdaPMInterior;
  if (s == "LM_interior") return WeightSetKind::LMInterior;
  if (s == "fixed") return WeightSetKind::Fixed;
  throw hweyl::DomainError("unknown weight set '" + s + "'");
}

OmegaVector parse_point_arg(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw hweyl::ParseError("expected 'x1,x2', got '" + s + "'");
  return {io::detail::parse_double(io::detail::trim(s.substr(0, comma)), "x1"),
          io::detail::parse_double(io::detail::trim(s.substr(comma + 1)),
                                   "x2")};
}

/// Isometric plane embedding of omega coordinates, for plotting.
std::pair<double, double> cartesian(OmegaVector v) {
  constexpr double w1x = 0.81649658092772603273;  // sqrt(2/3)
  constexpr double w2x = 0.40824829046386301636;  // 1/sqrt(6)
  constexpr double w2y = 0.70710678118654752440;  // 1/sqrt(2)
  return {v.x1 * w1x + v.x2 * w2x, v.x2 * w2y};
}

// ----------------------------------------------------------- subcommands

struct PointsCmd {
  int M = 4;
  std::string set = "HM";
  OutputOptions out;

  void run() const {
    const auto kind = parse_point_set(set);
    const auto pts = hweyl::generate_points(kind, M);
    if (out.format == "json")
      emit_json(out, io::points_to_json(set, M, pts));
    else
      with_output(out, [&](std::ostream& os) { io::write_points_csv(os, pts); });
  }
};

struct WeightsCmd {
  int M = 4;
  std::string set = "LM";
  OutputOptions out;

  void run() const {
    const auto kind = parse_weight_set(set);
    const auto ws = hweyl::generate_weights(kind, M);
    if (out.format == "json")
      emit_json(out, io::weights_to_json(set, M, ws));
    else
      with_output(out,
                  [&](std::ostream& os) { io::write_weights_csv(os, ws); });
  }
};

struct EvalCmd {
  FamilyOptions fam;
  std::vector<int> weight;
  std::string sign = "plus";
  std::vector<std::string> points;
  OutputOptions out;

  void run() const {
    const auto family = build_family(fam);
    if (weight.size() != 3)
      throw hweyl::DomainError("--weight requires three integers l0,l1,l2");
    const Weight l{weight[0], weight[1], weight[2], fam.M};
    const Sign sg = sign == "plus" ? Sign::Plus : Sign::Minus;
    const std::size_t index = family.index_of(l);
    std::vector<std::array<double, 4>> rows;
    for (const auto& p : points) {
      const OmegaVector x = parse_point_arg(p);
      const std::complex<double> v = family.eval(sg, index, x);
      rows.push_back({x.x1, x.x2, v.real(), v.imag()});
    }
    if (out.format == "json") {
      io::json jrows = io::json::array();
      for (const auto& r : rows)
        jrows.push_back({{"x", {r[0], r[1]}}, {"value", {r[2], r[3]}}});
      emit_json(out, io::json{{"M", fam.M},
                              {"weight", {l.l0, l.l1, l.l2}},
                              {"sign", sign},
                              {"values", std::move(jrows)}});
    } else {
      with_output(out, [&](std::ostream& os) {
        os << "x1,x2,re,im\n";
        for (const auto& r : rows)
          os << io::format_double(r[0]) << ',' << io::format_double(r[1])
             << ',' << io::format_double(r[2]) << ','
             << io::format_double(r[3]) << '\n';
      });
    }
  }
};

struct MatrixCmd {
  FamilyOptions fam;
  OutputOptions out;
  int precision = 3;

  void run() const {
    const auto m = hweyl::build_matrix(build_family(fam));
    if (out.format == "json")
      emit_json(out, io::matrix_to_json(m));
    else
      with_output(out, [&](std::ostream& os) {
        io::write_matrix_csv(os, m, precision);
      });
  }
};

struct TransformCmd {
  FamilyOptions fam;
  std::string input;
  bool inverse = false;
  OutputOptions out;

  void run() const {
    const auto family = build_family(fam);
    std::ifstream f(input);
    if (!f) throw hweyl::Error("cannot open input file '" + input + "'");
    if (inverse) {
      const auto spec = io::read_spectrum_csv(f, fam.M, family.kind());
      const auto samples = hweyl::inverse(family, spec);
      if (out.format == "json")
        emit_json(out, io::samples_to_json(samples));
      else
        with_output(out, [&](std::ostream& os) {
          io::write_samples_csv(os, samples);
        });
    } else {
      const auto samples = io::read_samples_csv(
          f, fam.M, hweyl::family_point_set(family.kind()));
      const auto spec = hweyl::forward(family, samples);
      if (out.format == "json")
        emit_json(out, io::spectrum_to_json(spec));
      else
        with_output(out, [&](std::ostream& os) {
          io::write_spectrum_csv(os, spec);
        });
    }
  }
};

struct OrthoCheckCmd {
  FamilyOptions fam;
  double tolerance = 1e-9;
  OutputOptions out;

  int run() const {
    const auto family = build_family(fam);
    const double gram = hweyl::gram_residual(family);
    const double unit = hweyl::unitarity_residual(hweyl::build_matrix(family));
    const bool ok = gram <= tolerance && unit <= tolerance;
    if (out.format == "json") {
      emit_json(out, io::json{{"gram_residual", gram},
                              {"unitarity_residual", unit},
                              {"tolerance", tolerance},
                              {"ok", ok}});
    } else {
      with_output(out, [&](std::ostream& os) {
        os << "gram_residual,unitarity_residual,tolerance,ok\n"
           << io::format_double(gram) << ',' << io::format_double(unit) << ','
           << io::format_double(tolerance) << ',' << (ok ? 1 : 0) << '\n';
      });
    }
    return ok ? 0 : 1;
  }
};

struct InterpTestCmd {
  std::vector<int> Ms{7, 9, 11, 13, 15};
  std::vector<std::string> kinds{"C", "S"};
  std::vector<std::string> types{"1", "2"};
  std::string kernel = "hartley";
  double sigma = 0.065;
  int resolution = 200;
  OutputOptions out;

  void run() const {
    const hweyl::ModelParams params{sigma};
    struct Row {
      int M;
      std::string kind, kernel, type;
      double error, seconds;
    };
    std::vector<Row> rows;
    for (const auto& kind : kinds) {
      for (const auto& type : types) {
        for (const int M : Ms) {
          const HoneycombFamily family(
              parse_kind(kind), parse_kernel(kernel), M,
              static_cast<CoeffPreset>(std::stoi(type)));
          const auto t0 = std::chrono::steady_clock::now();
          const double err = hweyl::integral_error(family, params, resolution);
          const std::chrono::duration<double> dt =
              std::chrono::steady_clock::now() - t0;
          rows.push_back({M, kind, kernel, type, err, dt.count()});
        }
      }
    }
    if (out.format == "json") {
      io::json jrows = io::json::array();
      for (const auto& r : rows)
        jrows.push_back({{"M", r.M},
                         {"kind", r.kind},
                         {"kernel", r.kernel},
                         {"type", r.type},
                         {"integral_error", r.error},
                         {"runtime_seconds", r.seconds}});
      emit_json(out, io::json{{"sigma", sigma},
                              {"resolution", resolution},
                              {"results", std::move(jrows)}});
    } else {
      with_output(out, [&](std::ostream& os) {
        os << "M,kind,kernel,type,integral_error,runtime_seconds\n";
        for (const auto& r : rows)
          os << r.M << ',' << r.kind << ',' << r.kernel << ',' << r.type
             << ',' << io::format_double(r.error) << ','
             << io::format_double(r.seconds) << '\n';
      });
    }
  }
};

struct ContourCmd {
  std::string function = "model";
  FamilyOptions fam;
  std::vector<int> weight;
  std::string sign = "plus";
  double sigma = 0.065;
  int resolution = 60;
  OutputOptions out;

  void run() const {
    if (resolution < 1) throw hweyl::DomainError("resolution must be >= 1");
    std::function<std::complex<double>(OmegaVector)> fn;
    if (function == "model") {
      const hweyl::ModelParams p{sigma};
      fn = [p](OmegaVector x) {
        return std::complex<double>(hweyl::model_function(p, x), 0.0);
      };
    } else if (function == "family") {
      auto family = std::make_shared<HoneycombFamily>(build_family(fam));
      if (weight.size() != 3)
        throw hweyl::DomainError("--weight requires three integers l0,l1,l2");
      const std::size_t index =
          family->index_of({weight[0], weight[1], weight[2], fam.M});
      const Sign sg = sign == "plus" ? Sign::Plus : Sign::Minus;
      fn = [family, sg, index](OmegaVector x) {
        return family->eval(sg, index, x);
      };
    } else {  // interp
      auto family = std::make_shared<HoneycombFamily>(build_family(fam));
      const hweyl::ModelParams p{sigma};
      const auto samples = hweyl::sample_on(
          hweyl::family_point_set(family->kind()), fam.M, [&](OmegaVector x) {
            return std::complex<double>(hweyl::model_function(p, x), 0.0);
          });
      auto ih =
          std::make_shared<hweyl::Interpolant>(*family,
                                               hweyl::forward(*family, samples));
      fn = [ih](OmegaVector x) { return (*ih)(x); };
    }

    struct Row {
      double x1, x2, cx, cy, re, im;
    };
    std::vector<Row> rows;
    const double n = resolution;
    for (int i = 0; i <= resolution; ++i) {
      for (int j = 0; i + j <= resolution; ++j) {
        const OmegaVector x{i / n, j / n};
        const auto [cx, cy] = cartesian(x);
        const std::complex<double> v = fn(x);
        rows.push_back({x.x1, x.x2, cx, cy, v.real(), v.imag()});
      }
    }
    if (out.format == "json") {
      io::json jrows = io::json::array();
      for (const auto& r : rows)
        jrows.push_back({{"x", {r.x1, r.x2}},
                         {"cartesian", {r.cx, r.cy}},
                         {"value", {r.re, r.im}}});
      emit_json(out, io::json{{"function", function},
                              {"resolution", resolution},
                              {"rows", std::move(jrows)}});
    } else {
      with_output(out, [&](std::ostream& os) {
        os << "x1,x2,x,y,re,im\n";
        for (const auto& r : rows)
          os << io::format_double(r.x1) << ',' << io::format_double(r.x2)
             << ',' << io::format_double(r.cx) << ','
             << io::format_double(r.cy) << ',' << io::format_double(r.re)
             << ',' << io::format_double(r.im) << '\n';
      });
    }
  }
};

struct FreqCmd {
  int M = 4;
  double kappa = 1.0;
  double mass = 1.0;
  double eta = 0.5;
  std::string set = "LM";
  OutputOptions out;

  void run() const {
    const auto ws = hweyl::generate_weights(parse_weight_set(set), M);
    const hweyl::GrapheneParams g{kappa, mass, eta};
    if (out.format == "json") {
      io::json jrows = io::json::array();
      for (const auto& w : ws) {
        const auto [op, om] = hweyl::graphene_frequencies(g, w);
        jrows.push_back({{"weight", {w.l0, w.l1, w.l2}},
                         {"omega_plus", op},
                         {"omega_minus", om}});
      }
      emit_json(out, io::json{{"M", M},
                              {"kappa", kappa},
                              {"mass", mass},
                              {"eta", eta},
                              {"modes", std::move(jrows)}});
    } else {
      with_output(out, [&](std::ostream& os) {
        os << "l0,l1,l2,omega_plus,omega_minus\n";
        for (const auto& w : ws) {
          const auto [op, om] = hweyl::graphene_frequencies(g, w);
          os << w.l0 << ',' << w.l1 << ',' << w.l2 << ','
             << io::format_double(op) << ',' << io::format_double(om) << '\n';
        }
      });
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "discrete Fourier and Hartley transforms on a triangular honeycomb "
      "lattice fragment"};
  app.require_subcommand(1);

  PointsCmd points;
  auto* points_cmd = app.add_subcommand("points", "dump an ordered point set");
  points_cmd->add_option("--M", points.M, "resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  points_cmd->add_option("--set", points.set, "point set name")
      ->check(CLI::IsMember({"FPM", "FQM", "HM", "HM1", "HM2", "FPM_interior",
                             "FQM_interior", "HM_interior"}))
      ->capture_default_str();
  add_output_options(points_cmd, points.out);

  WeightsCmd weights;
  auto* weights_cmd =
      app.add_subcommand("weights", "dump an ordered weight set");
  weights_cmd->add_option("--M", weights.M, "resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  weights_cmd->add_option("--set", weights.set, "weight set name")
      ->check(CLI::IsMember({"LQM", "LPM", "LM", "LQM_interior",
                             "LPM_interior", "LM_interior", "fixed"}))
      ->capture_default_str();
  add_output_options(weights_cmd, weights.out);

  EvalCmd eval;
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate one family member at given points");
  add_family_options(eval_cmd, eval.fam);
  eval_cmd->add_option("--weight", eval.weight, "weight triple l0,l1,l2")
      ->required()
      ->delimiter(',');
  eval_cmd->add_option("--sign", eval.sign, "family half")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  eval_cmd
      ->add_option("--x", eval.points, "evaluation point 'x1,x2' (repeatable)")
      ->required();
  add_output_options(eval_cmd, eval.out);

  MatrixCmd matrix;
  auto* matrix_cmd =
      app.add_subcommand("matrix", "emit the unitary transform matrix");
  add_family_options(matrix_cmd, matrix.fam);
  matrix_cmd
      ->add_option("--precision", matrix.precision,
                   "CSV decimals (-1 for full precision)")
      ->capture_default_str();
  add_output_options(matrix_cmd, matrix.out);

  TransformCmd transform;
  auto* transform_cmd = app.add_subcommand(
      "transform", "forward (samples -> spectrum) or inverse transform");
  add_family_options(transform_cmd, transform.fam);
  transform_cmd->add_option("--in", transform.input, "input CSV file")
      ->required();
  transform_cmd->add_flag("--inverse", transform.inverse,
                          "treat input as a spectrum and invert");
  add_output_options(transform_cmd, transform.out);

  OrthoCheckCmd ortho;
  auto* ortho_cmd = app.add_subcommand(
      "ortho-check", "audit family orthogonality and matrix unitarity");
  add_family_options(ortho_cmd, ortho.fam);
  ortho_cmd->add_option("--tolerance", ortho.tolerance, "pass threshold")
      ->capture_default_str();
  add_output_options(ortho_cmd, ortho.out);

  InterpTestCmd interp;
  auto* interp_cmd = app.add_subcommand(
      "interp-test", "interpolation experiment error report");
  interp_cmd->add_option("--M", interp.Ms, "resolutions (repeatable)")
      ->delimiter(',')
      ->capture_default_str();
  interp_cmd->add_option("--kind", interp.kinds, "family kinds to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"C", "S"}))
      ->capture_default_str();
  interp_cmd->add_option("--type", interp.types, "coefficient choices to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"1", "2", "3"}))
      ->capture_default_str();
  interp_cmd->add_option("--kernel", interp.kernel, "kernel flavour")
      ->check(CLI::IsMember({"fourier", "hartley"}))
      ->capture_default_str();
  interp_cmd->add_option("--sigma", interp.sigma, "profile width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  interp_cmd
      ->add_option("--resolution", interp.resolution, "quadrature resolution")
      ->check(CLI::Range(50, 100000))
      ->capture_default_str();
  add_output_options(interp_cmd, interp.out);

  ContourCmd contour;
  auto* contour_cmd = app.add_subcommand(
      "contour", "sample a function on a triangular grid for plotting");
  contour_cmd->add_option("--function", contour.function, "what to sample")
      ->check(CLI::IsMember({"model", "family", "interp"}))
      ->capture_default_str();
  add_family_options(contour_cmd, contour.fam);
  contour_cmd->add_option("--weight", contour.weight, "weight triple l0,l1,l2")
      ->delimiter(',');
  contour_cmd->add_option("--sign", contour.sign, "family half")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  contour_cmd->add_option("--sigma", contour.sigma, "profile width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  contour_cmd->add_option("--resolution", contour.resolution, "grid divisions")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_output_options(contour_cmd, contour.out);

  FreqCmd freq;
  auto* freq_cmd = app.add_subcommand(
      "freq", "spring-lattice eigenfrequency table over a weight set");
  freq_cmd->add_option("--M", freq.M, "resolution")
      ->required()
      ->check(CLI::PositiveNumber);
  freq_cmd->add_option("--kappa", freq.kappa, "spring constant")
      ->capture_default_str();
  freq_cmd->add_option("--mass", freq.mass, "node mass")
      ->capture_default_str();
  freq_cmd->add_option("--eta", freq.eta, "stretching ratio")
      ->capture_default_str();
  freq_cmd->add_option("--set", freq.set, "weight set")
      ->check(CLI::IsMember({"LM", "LM_interior"}))
      ->capture_default_str();
  add_output_options(freq_cmd, freq.out);

  // The family options of `contour` are only needed for family/interp
  // sampling; make --M optional there by re-registering a default.
  contour_cmd->get_option("--M")->required(false);

  try {
    app.parse(argc, argv);
    if (points_cmd->parsed()) points.run();
    if (weights_cmd->parsed()) weights.run();
    if (eval_cmd->parsed()) eval.run();
    if (matrix_cmd->parsed()) matrix.run();
    if (transform_cmd->parsed()) transform.run();
    if (ortho_cmd->parsed()) return ortho.run();
    if (interp_cmd->parsed()) interp.run();
    if (contour_cmd->parsed()) contour.run();
    if (freq_cmd->parsed()) freq.run();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const hweyl::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
