#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "vregion/jet.hpp"

using namespace vregion;
using testutil::random_in_disk;

namespace {

Jet2 random_jet(std::mt19937_64& rng) {
  return {random_in_disk(rng, 2.0), random_in_disk(rng, 2.0), random_in_disk(rng, 2.0)};
}

double jet_distance(const Jet2& a, const Jet2& b) {
  return std::abs(a.v - b.v) + std::abs(a.d1 - b.d1) + std::abs(a.d2 - b.d2);
}

}  // namespace

TEST_CASE("cube of the identity jet carries the derivatives of z^3") {
  const Jet2 z = Jet2::identity({0.3, 0.0});
  const Jet2 cube = z * z * z;
  CHECK(cube.v.real() == doctest::Approx(0.027).epsilon(1e-15));
  CHECK(cube.d1.real() == doctest::Approx(0.27).epsilon(1e-15));
  CHECK(cube.d2.real() == doctest::Approx(1.8).epsilon(1e-15));
  CHECK(cube.v.imag() == 0.0);
  CHECK(cube.d1.imag() == 0.0);
  CHECK(cube.d2.imag() == 0.0);
}

TEST_CASE("reciprocal jet carries the derivatives of 1/z") {
  const Jet2 inv = Jet2::constant({1.0, 0.0}) / Jet2::identity({2.0, 0.0});
  CHECK(inv.v.real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(inv.d1.real() == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK(inv.d2.real() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("division by a vanishing value is a pole error") {
  CHECK_THROWS_AS(Jet2::constant({1.0, 0.0}) / Jet2::constant({0.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(Jet2::constant({1.0, 0.0}) / Jet2::constant({1e-15, 0.0}), std::domain_error);
}

TEST_CASE("product and quotient satisfy ring identities on random jets") {
  std::mt19937_64 rng(20240811);
  for (int k = 0; k < 200; ++k) {
    const Jet2 x = random_jet(rng), y = random_jet(rng), z = random_jet(rng);
    CHECK(jet_distance((x * y) * z, x * (y * z)) < 1e-12);
    CHECK(jet_distance((x + y) * z, x * z + y * z) < 1e-12);
    if (std::abs(y.v) > 0.1) {
      CHECK(jet_distance((x / y) * y, x) < 1e-12);
    }
  }
}

TEST_CASE("moebius parameter validation") {
  CHECK_NOTHROW(MoebiusParam({0.5, 0.25}));
  CHECK_NOTHROW(MoebiusParam({1.0, 0.0}));  // unimodular factors are allowed
  CHECK_THROWS_AS(MoebiusParam({1.5, 0.0}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(MoebiusParam({nan, 0.0}), std::invalid_argument);
}

TEST_CASE("moebius jet at the origin carries the closed-form derivatives") {
  // T_a(0) = a, T_a'(0) = 1 - |a|^2, T_a''(0) = -2 conj(a)(1 - |a|^2).
  const Complex a{0.4, -0.2};
  const Jet2 jet = moebius_jet(MoebiusParam{a}, Jet2::identity({0.0, 0.0}));
  const double one_minus = 1.0 - std::norm(a);
  CHECK(std::abs(jet.v - a) < 1e-15);
  CHECK(std::abs(jet.d1 - Complex{one_minus, 0.0}) < 1e-15);
  CHECK(std::abs(jet.d2 - (-2.0 * std::conj(a) * one_minus)) < 1e-15);
}

TEST_CASE("moebius jet matches Richardson finite differences") {
  std::mt19937_64 rng(77001);
  for (int k = 0; k < 50; ++k) {
    const MoebiusParam t{random_in_disk(rng, 0.9)};
    const Complex z = random_in_disk(rng, 0.8);
    const Jet2 jet = moebius_jet(t, Jet2::identity(z));
    auto f = [&](Complex w) { return moebius_eval(t, w); };
    CHECK(std::abs(jet.v - f(z)) == 0.0);
    CHECK(std::abs(jet.d1 - testutil::richardson1(f, z, 1e-4)) < 1e-8 * (1.0 + std::abs(jet.d1)));
    CHECK(std::abs(jet.d2 - testutil::richardson2(f, z, 1e-4)) < 1e-6 * (1.0 + std::abs(jet.d2)));
  }
}

TEST_CASE("moebius inverse composition is the identity") {
  std::mt19937_64 rng(5150);
  for (int k = 0; k < 100; ++k) {
    const Complex a = random_in_disk(rng, 0.95);
    const Complex z = random_in_disk(rng, 0.9);
    const Jet2 inner = moebius_jet(MoebiusParam{-a}, Jet2::identity(z));
    const Jet2 round_trip = moebius_jet(MoebiusParam{a}, inner);
    CHECK(std::abs(round_trip.v - z) < 1e-13);
    CHECK(std::abs(round_trip.d1 - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(round_trip.d2) < 1e-11);
  }
}

TEST_CASE("unimodular parameter degenerates to a constant map") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 20; ++k) {
    const Complex a = testutil::random_unimodular(rng);
    const Jet2 jet = moebius_jet(MoebiusParam{a}, Jet2::identity(random_in_disk(rng, 0.8)));
    CHECK(std::abs(jet.v - a) < 1e-14);
    CHECK(std::abs(jet.d1) < 1e-14);
    CHECK(std::abs(jet.d2) < 1e-13);
  }
}

TEST_CASE("moebius evaluation at the pole is rejected") {
  const MoebiusParam t{{0.5, 0.0}};
  CHECK_THROWS_AS(moebius_eval(t, {-2.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(moebius_jet(t, Jet2::identity({-2.0, 0.0})), std::domain_error);
}
