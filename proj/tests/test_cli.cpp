#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "vregion/serialize.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the installed binary with `args`, capturing exit code and stdout.
CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::string path = "cli_capture_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      std::string(VREGION_CLI_PATH) + " " + args + " > " + path + " 2> /dev/null";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  CliResult res;
  res.code = WEXITSTATUS(rc);
  res.out = slurp(path);
  std::remove(path.c_str());
  return res;
}

const std::string kMixedArgs = "--r 0.6666666666666666 --s 0.3333333333333333";

}  // namespace

TEST_CASE("classify reports the regime trichotomy") {
  SUBCASE("full circle carries the closed-form circle") {
    const CliResult res = run_cli("classify --r 0.75 --s 0.25");
    REQUIRE(res.code == 0);
    const json doc = json::parse(res.out);
    CHECK(doc.at("command") == "classify");
    CHECK(doc.at("params").at("r").get<double>() == 0.75);
    const json& pl = doc.at("payload");
    CHECK(pl.at("regime") == "full_circle");
    CHECK(std::abs(pl.at("amplitude").get<double>() - 4096.0 / 441.0) < 1e-12);
    CHECK(std::abs(pl.at("circle_center_re").get<double>() - (-512.0 / 441.0)) < 1e-12);
    CHECK(pl.at("circle_center_im").get<double>() == 0.0);
    CHECK(std::abs(pl.at("circle_radius").get<double>() - 4608.0 / 441.0) < 1e-11);
    CHECK(!pl.contains("theta0"));
  }

  SUBCASE("convex Jordan") {
    const CliResult res = run_cli("classify --r 0.25 --s 0.23529411764705882");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("regime") == "convex_jordan");
    CHECK(!pl.contains("theta0"));
    CHECK(!pl.contains("circle_radius"));
  }

  SUBCASE("mixed carries the transition angle") {
    const CliResult res = run_cli("classify " + kMixedArgs);
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("regime") == "mixed");
    CHECK(std::abs(pl.at("theta0").get<double>() - std::acos(0.25)) < 1e-10);
  }

  SUBCASE("bad input exits 2") {
    CHECK(run_cli("classify --r 1.2 --s 0.1").code == 2);
    CHECK(run_cli("classify --r 0.5").code == 2);
    CHECK(run_cli("classify --r 0.5 --s 0.2 --bogus").code == 2);
    CHECK(run_cli("").code == 2);
  }
}

TEST_CASE("boundary emits parseable documents in every format") {
  SUBCASE("json file round-trips through the library parser") {
    const std::string path = "cli_boundary_roundtrip.json";
    const CliResult res = run_cli("boundary " + kMixedArgs + " --out " + path);
    REQUIRE(res.code == 0);
    const vregion::RegionPolyline poly = vregion::boundary_from_json(slurp(path));
    std::remove(path.c_str());
    // default 512 grid angles plus the two inserted transition vertices
    CHECK(poly.points.size() == 514);
    CHECK(poly.closed);
    CHECK(poly.points.back().theta == doctest::Approx(3.141592653589793).epsilon(1e-15));
  }

  SUBCASE("csv goes to stdout by default") {
    const CliResult res = run_cli("boundary --r 0.75 --s 0.25 --format csv --samples 32");
    REQUIRE(res.code == 0);
    CHECK(res.out.rfind("theta,r_theta,zeta_re,zeta_im,gamma_re,gamma_im,arc_kind\n", 0) == 0);
    CHECK(vregion::boundary_from_csv(res.out).size() == 32);
  }

  SUBCASE("svg") {
    const CliResult res = run_cli("boundary " + kMixedArgs + " --format svg --samples 64");
    REQUIRE(res.code == 0);
    CHECK(res.out.rfind("<svg ", 0) == 0);
    CHECK(res.out.find("stroke-dasharray=\"4 2\"") != std::string::npos);
  }

  SUBCASE("input errors exit 2, unwritable output exits 3") {
    CHECK(run_cli("boundary " + kMixedArgs + " --format bogus").code == 2);
    CHECK(run_cli("boundary " + kMixedArgs + " --samples 8").code == 2);
    CHECK(run_cli("boundary " + kMixedArgs + " --out /nonexistent_dir_zzz/x.json").code == 3);
  }
}

TEST_CASE("extremal reports the synthesized function's jet") {
  SUBCASE("interior direction attains the support point") {
    const CliResult res = run_cli("extremal " + kMixedArgs + " --theta 0");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("form") == "interior");
    CHECK(std::abs(pl.at("zeta_re").get<double>() - 0.5) < 1e-12);
    CHECK(std::abs(pl.at("zeta_im").get<double>()) < 1e-12);
    CHECK(std::abs(pl.at("gamma_re").get<double>() - 4.455) < 1e-11);
    CHECK(std::abs(pl.at("jet").at("f2_re").get<double>() - 4.455) < 1e-9);
    CHECK(pl.at("attainment_error").get<double>() < 1e-9);
  }

  SUBCASE("theta = pi lands on the boundary-parameter form") {
    const CliResult res = run_cli("extremal " + kMixedArgs + " --theta 3.141592653589793");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("form") == "boundary_arc");
    CHECK(std::abs(pl.at("zeta_re").get<double>() - (-1.0)) < 1e-9);
    CHECK(std::abs(pl.at("r_theta").get<double>() - 5.0 / 6.0) < 1e-12);
  }

  SUBCASE("membership check validates the synthesized function") {
    const CliResult res = run_cli("extremal " + kMixedArgs + " --theta 0.7 --check");
    REQUIRE(res.code == 0);
    const json m = json::parse(res.out).at("payload").at("membership");
    CHECK(m.at("passed").get<bool>());
    CHECK(m.at("f0_abs").get<double>() <= 1e-12);
    CHECK(m.at("f_r_error").get<double>() <= 1e-12);
    CHECK(m.at("sup_mod").get<double>() <= 1.0 + 1e-9);
  }

  SUBCASE("explicit evaluation point suppresses the attainment field") {
    const CliResult res = run_cli("extremal " + kMixedArgs + " --theta 0 --z-eval 0.1+0.2i");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("z_eval_re").get<double>() == 0.1);
    CHECK(pl.at("z_eval_im").get<double>() == 0.2);
    CHECK(!pl.contains("attainment_error"));
    const double fr = pl.at("jet").at("f_re").get<double>();
    const double fi = pl.at("jet").at("f_im").get<double>();
    CHECK(std::hypot(fr, fi) < 1.0);
  }

  SUBCASE("invalid parameters exit 2") {
    CHECK(run_cli("extremal --r 0.9 --s 0.95 --theta 0").code == 2);
    CHECK(run_cli("extremal " + kMixedArgs).code == 2);
  }
}

TEST_CASE("verify runs the independent cross-check") {
  const std::string sizes =
      " --rings 40 --angles 40 --alphas 16 --boundary-samples 512 --theta-samples 16";

  SUBCASE("clean run passes") {
    const CliResult res = run_cli("verify " + kMixedArgs + sizes);
    CHECK(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("passed").get<bool>());
    CHECK(pl.at("support_passed").get<bool>());
    CHECK(pl.at("fill_passed").get<bool>());
    CHECK(pl.at("attainment_passed").get<bool>());
    CHECK(pl.at("n_samples").get<long long>() == 40 * 40 * 16);
    CHECK(pl.at("max_support_violation").get<double>() <=
          1e-9 * pl.at("scale").get<double>());
  }

  SUBCASE("perturbed boundary fails with a positive witness") {
    const CliResult res = run_cli("verify " + kMixedArgs + sizes + " --perturb-gamma 1e-3");
    CHECK(res.code == 1);
    const json pl = json::parse(res.out).at("payload");
    CHECK(!pl.at("passed").get<bool>());
    CHECK(!pl.at("support_passed").get<bool>());
    CHECK(pl.at("max_support_violation").get<double>() > 0.0);
  }

  SUBCASE("seeded sampling is reproducible byte for byte") {
    const std::string args = "verify " + kMixedArgs +
                             " --rings 12 --angles 16 --alphas 8 --boundary-samples 128"
                             " --theta-samples 8 --seed 7";
    const CliResult a = run_cli(args);
    const CliResult b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("reduce maps general parameters to canonical form") {
  SUBCASE("canonical input is a fixed point") {
    const CliResult res = run_cli("reduce --z0 0.75 --w0 0.25");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(pl.at("r").get<double>() == 0.75);
    CHECK(pl.at("s").get<double>() == 0.25);
    CHECK(pl.at("phase_re").get<double>() == 1.0);
    CHECK(pl.at("phase_im").get<double>() == 0.0);
    CHECK(!pl.contains("boundary"));
  }

  SUBCASE("imaginary base point flips the phase") {
    const CliResult res = run_cli("reduce --z0 0+0.75i --w0 0.25");
    REQUIRE(res.code == 0);
    const json pl = json::parse(res.out).at("payload");
    CHECK(std::abs(pl.at("r").get<double>() - 0.75) < 1e-15);
    CHECK(std::abs(pl.at("phase_re").get<double>() - (-1.0)) < 1e-12);
    CHECK(std::abs(pl.at("phase_im").get<double>()) < 1e-12);
  }

  SUBCASE("transported boundary sampling") {
    const CliResult res = run_cli("reduce --z0 0.75 --w0 0.25 --boundary --samples 32");
    REQUIRE(res.code == 0);
    const json b = json::parse(res.out).at("payload").at("boundary");
    CHECK(b.at("n_points").get<long long>() == 32);
    REQUIRE(b.at("points").size() == 32);
    CHECK(b.at("points")[0].contains("gamma_re"));
    CHECK(b.at("points")[0].contains("theta"));
  }

  SUBCASE("invalid inputs exit 2") {
    CHECK(run_cli("reduce --z0 0.5 --w0 0.8").code == 2);
    CHECK(run_cli("reduce --z0 abc --w0 0.1").code == 2);
    CHECK(run_cli("reduce --z0 0.5 --w0 0.1+0.1").code == 2);
  }
}
