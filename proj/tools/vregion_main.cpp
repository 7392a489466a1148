#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "vregion/extremal.hpp"
#include "vregion/oracle.hpp"
#include "vregion/reduction.hpp"
#include "vregion/region.hpp"
#include "vregion/serialize.hpp"

namespace {

using namespace vregion;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

struct IoError {
  std::string what;
};

double parse_strict_double(const std::string& tok) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed number in complex literal: '" + tok + "'");
  }
  if (used != tok.size())
    throw std::invalid_argument("malformed number in complex literal: '" + tok + "'");
  return v;
}

// Imaginary coefficient: an empty or bare-sign token means +-1 ("i", "-i").
double parse_imag_token(const std::string& tok) {
  if (tok.empty() || tok == "+") return 1.0;
  if (tok == "-") return -1.0;
  return parse_strict_double(tok);
}

// Accepts "a", "bi", "a+bi", "a-bi" with standard decimal doubles (exponents
// allowed; the e/E guard keeps "1e-3" intact).
Complex parse_complex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty complex literal");
  if (text.back() != 'i') return {parse_strict_double(text), 0.0};

  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    const char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_imag_token(body)};
  return {parse_strict_double(body.substr(0, split)), parse_imag_token(body.substr(split))};
}

void write_output(const std::string& doc, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError{"cannot open output file: " + out_path};
  out << doc;
  out.flush();
  if (!out) throw IoError{"write failed: " + out_path};
}

void canonical_params_fields(JsonWriter& w, const CanonicalParams& p) {
  w.key("params").begin_object();
  w.key("r").value(p.r());
  w.key("s").value(p.s());
  w.end_object();
}

void jet_fields(JsonWriter& w, const Jet2& jet) {
  w.key("f_re").value(jet.v.real());
  w.key("f_im").value(jet.v.imag());
  w.key("f1_re").value(jet.d1.real());
  w.key("f1_im").value(jet.d1.imag());
  w.key("f2_re").value(jet.d2.real());
  w.key("f2_im").value(jet.d2.imag());
}

int cmd_classify(double r, double s) {
  const CanonicalParams p(r, s);
  const Regime regime = classify_regime(p);
  const double amp = amplitude(p);

  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  w.key("command").value("classify");
  canonical_params_fields(w, p);
  w.key("payload").begin_object();
  w.key("regime").value(regime_name(regime.kind));
  w.key("amplitude").value(amp);
  if (regime.theta0) w.key("theta0").value(*regime.theta0);
  if (regime.kind == RegimeKind::FullCircle) {
    const double k = amp / (4.0 * (r * r - s * s));
    w.key("circle_center_re").value(-s * k);
    w.key("circle_center_im").value(0.0);
    w.key("circle_radius").value((1.0 + 4.0 * (r * r - s * s)) * r * k);
  }
  w.end_object();
  w.end_object();
  std::cout << w.take();
  return kExitOk;
}

int cmd_boundary(double r, double s, int samples, const std::string& format,
                 const std::string& out_path) {
  const CanonicalParams p(r, s);
  const RegionPolyline poly = boundary_polyline(p, samples);
  std::string doc;
  if (format == "json") {
    doc = boundary_to_json(poly);
  } else if (format == "csv") {
    doc = boundary_to_csv(poly);
  } else if (format == "svg") {
    doc = boundary_to_svg(poly);
  } else {
    throw std::invalid_argument("unknown format: " + format);
  }
  write_output(doc, out_path);
  return kExitOk;
}

int cmd_extremal(double r, double s, double theta, std::optional<Complex> z_eval, bool check) {
  const CanonicalParams p(r, s);
  const BoundaryPoint bp = boundary_point(p, theta);
  const ExtremalSpec spec = build_extremal(p, theta);
  const bool interior_form = std::holds_alternative<InteriorSpec>(spec);
  const Complex z = z_eval.value_or(Complex{p.r(), 0.0});
  const Jet2 jet = eval_jet(spec, z);

  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  w.key("command").value("extremal");
  canonical_params_fields(w, p);
  w.key("payload").begin_object();
  w.key("form").value(interior_form ? "interior" : "boundary_arc");
  w.key("theta").value(theta);
  w.key("zeta_re").value(bp.zeta.real());
  w.key("zeta_im").value(bp.zeta.imag());
  w.key("u_re").value(std::cos(theta));
  w.key("u_im").value(std::sin(theta));
  w.key("r_theta").value(bp.r_theta);
  w.key("z_eval_re").value(z.real());
  w.key("z_eval_im").value(z.imag());
  w.key("jet").begin_object();
  jet_fields(w, jet);
  w.end_object();
  w.key("gamma_re").value(bp.gamma.real());
  w.key("gamma_im").value(bp.gamma.imag());
  if (!z_eval || *z_eval == Complex{p.r(), 0.0})
    w.key("attainment_error").value(std::abs(jet.d2 - bp.gamma));
  if (check) {
    const MembershipReport m = validate_membership(spec);
    w.key("membership").begin_object();
    w.key("f0_abs").value(std::abs(m.f0));
    w.key("f_r_error").value(m.f_r_error);
    w.key("sup_mod").value(m.sup_mod);
    w.key("passed").value(m.passed);
    w.end_object();
  }
  w.end_object();
  w.end_object();
  std::cout << w.take();
  return kExitOk;
}

int cmd_verify(double r, double s, const VerifyOptions& opts, int theta_samples) {
  const CanonicalParams p(r, s);
  const VerificationReport report = run_verification(p, opts);

  const double attainment = max_attainment_error(p, theta_samples);
  const double attainment_tol = 1e-9 * tolerance_scale(p);
  const bool attainment_passed = attainment <= attainment_tol;
  const bool passed = report.passed && attainment_passed;

  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  w.key("command").value("verify");
  canonical_params_fields(w, p);
  w.key("payload").begin_object();
  w.key("regime").value(regime_name(classify_regime(p).kind));
  w.key("n_samples").value_int(static_cast<long long>(report.n_samples));
  w.key("scale").value(report.scale);
  w.key("tol_in").value(report.tol_in);
  w.key("tol_fill").value(report.tol_fill);
  w.key("max_support_violation").value(report.max_support_violation);
  w.key("worst_theta").value(report.worst_theta);
  w.key("worst_sample").value_int(static_cast<long long>(report.worst_sample));
  w.key("hull_gap").value(report.hull_gap);
  w.key("diameter").value(report.diameter);
  w.key("support_passed").value(report.support_passed);
  w.key("fill_passed").value(report.fill_passed);
  w.key("attainment_error").value(attainment);
  w.key("attainment_tol").value(attainment_tol);
  w.key("attainment_passed").value(attainment_passed);
  w.key("passed").value(passed);
  w.end_object();
  w.end_object();
  std::cout << w.take();
  return passed ? kExitOk : kExitVerifyFail;
}

int cmd_reduce(Complex z0, Complex w0, bool with_boundary, int samples) {
  const GeneralParams gp(z0, w0);
  const Reduction red = to_canonical(gp);

  JsonWriter w;
  w.begin_object();
  w.key("schema_version").value("1");
  w.key("command").value("reduce");
  w.key("params").begin_object();
  w.key("z0_re").value(z0.real());
  w.key("z0_im").value(z0.imag());
  w.key("w0_re").value(w0.real());
  w.key("w0_im").value(w0.imag());
  w.end_object();
  w.key("payload").begin_object();
  w.key("r").value(red.canonical.r());
  w.key("s").value(red.canonical.s());
  w.key("phase_re").value(red.phase.real());
  w.key("phase_im").value(red.phase.imag());
  if (with_boundary) {
    const RegionPolyline poly = boundary_polyline(red.canonical, samples);
    w.key("boundary").begin_object();
    w.key("n_points").value_int(static_cast<long long>(poly.points.size()));
    w.key("points").begin_array();
    for (const BoundaryPoint& bp : poly.points) {
      const Complex g = map_back(red, bp.gamma);
      w.begin_object();
      w.key("theta").value(bp.theta);
      w.key("gamma_re").value(g.real());
      w.key("gamma_im").value(g.imag());
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_object();
  w.end_object();
  std::cout << w.take();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variability region of the second derivative at a fixed interior point"};
  app.require_subcommand(1);

  double r = 0.0, s = 0.0, theta = 0.0;
  int samples = 512;
  std::string format = "json", out_path;
  std::string z_eval_text, z0_text, w0_text;
  bool check = false, with_boundary = false;
  VerifyOptions vopts;
  int theta_samples = 64;
  std::uint64_t seed_value = 0;

  auto* classify = app.add_subcommand("classify", "Regime trichotomy for canonical (r, s)");
  classify->add_option("--r", r, "canonical radius, 0 < r < 1")->required();
  classify->add_option("--s", s, "canonical target, 0 <= s < r")->required();

  auto* boundary = app.add_subcommand("boundary", "Export the boundary polyline");
  boundary->add_option("--r", r)->required();
  boundary->add_option("--s", s)->required();
  boundary->add_option("--samples", samples, "directions over (-pi, pi], >= 16")
      ->capture_default_str();
  boundary->add_option("--format", format, "json, csv or svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  boundary->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* extremal = app.add_subcommand("extremal", "Synthesize the boundary-attaining function");
  extremal->add_option("--r", r)->required();
  extremal->add_option("--s", s)->required();
  extremal->add_option("--theta", theta, "normal direction")->required();
  extremal->add_option("--z-eval", z_eval_text, "evaluation point a+bi (default r)");
  extremal->add_flag("--check", check, "run the membership validation grid");

  auto* verify = app.add_subcommand("verify", "Independent sampling verification of the boundary");
  verify->add_option("--r", r)->required();
  verify->add_option("--s", s)->required();
  verify->add_option("--rings", vopts.rings)->capture_default_str();
  verify->add_option("--angles", vopts.angles)->capture_default_str();
  verify->add_option("--alphas", vopts.alphas)->capture_default_str();
  verify->add_option("--boundary-samples", vopts.boundary_samples)->capture_default_str();
  verify->add_option("--tol-in", vopts.tol_in, "support allowance, units of scale")
      ->capture_default_str();
  verify->add_option("--tol-fill", vopts.tol_fill, "hull-gap allowance, fraction of diameter")
      ->capture_default_str();
  verify->add_option("--theta-samples", theta_samples, "attainment sweep directions")
      ->capture_default_str();
  auto* seed_opt = verify->add_option("--seed", seed_value, "randomized lambda draws");
  verify->add_option("--perturb-gamma", vopts.gamma_perturb,
                     "debug: shrink the claimed boundary by this factor");

  auto* reduce = app.add_subcommand("reduce", "Reduce general (z0, w0) to canonical form");
  reduce->add_option("--z0", z0_text, "interior point, a+bi")->required();
  reduce->add_option("--w0", w0_text, "target value, a+bi")->required();
  reduce->add_flag("--boundary", with_boundary, "emit the transported boundary");
  reduce->add_option("--samples", samples)->capture_default_str();

  try {
    app.parse(argc, argv);
    if (classify->parsed()) return cmd_classify(r, s);
    if (boundary->parsed()) return cmd_boundary(r, s, samples, format, out_path);
    if (extremal->parsed()) {
      std::optional<Complex> z_eval;
      if (!z_eval_text.empty()) z_eval = parse_complex(z_eval_text);
      return cmd_extremal(r, s, theta, z_eval, check);
    }
    if (verify->parsed()) {
      if (seed_opt->count() > 0) vopts.seed = seed_value;
      return cmd_verify(r, s, vopts, theta_samples);
    }
    if (reduce->parsed())
      return cmd_reduce(parse_complex(z0_text), parse_complex(w0_text), with_boundary, samples);
    return kExitInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
