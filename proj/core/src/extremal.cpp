#include "vregion/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vregion {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitSlack = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

// Shared composition f(z) = z T_{s/r}( T_{-r}(z) * T_{lambda}( alpha T_{-r}(z) ) ).
// With |lambda| = 1 the middle factor degenerates to the constant lambda and
// the same tree reduces to the unimodular form.
Jet2 eval_family(const CanonicalParams& p, Complex lambda, Complex alpha, const Jet2& z) {
  const MoebiusParam pull{-p.r()};
  const MoebiusParam push{p.s() / p.r()};
  const Jet2 w = moebius_jet(pull, z);
  const Jet2 inner = moebius_jet(MoebiusParam{lambda}, alpha * w);
  return z * moebius_jet(push, w * inner);
}

}  // namespace

ExtremalSpec build_extremal_interior(const CanonicalParams& p, double theta) {
  const RootResult root = solve_r_theta(p, theta);
  const Complex zeta = zeta_theta(p, theta);
  if (!root.interior || std::abs(zeta) >= 1.0 - kUnitSlack)
    throw std::domain_error(
        "build_extremal_interior: direction lands on the unimodular arc; use the boundary form");
  return InteriorSpec{p, theta, zeta};
}

ExtremalSpec build_extremal_boundary(const CanonicalParams& p, double theta) {
  const RootResult root = solve_r_theta(p, theta);
  if (root.interior && std::abs(zeta_theta(p, theta)) < 1.0 - kUnitSlack)
    throw std::domain_error(
        "build_extremal_boundary: direction has an interior index; use the interior form");
  Complex zeta = zeta_theta(p, theta);
  zeta /= std::abs(zeta);  // pin onto the unit circle; solver residual is ~1e-14
  return BoundaryArcSpec{p, zeta};
}

ExtremalSpec build_extremal(const CanonicalParams& p, double theta) {
  const RootResult root = solve_r_theta(p, theta);
  const Complex zeta = zeta_theta(p, theta);
  if (root.interior && std::abs(zeta) < 1.0 - kUnitSlack) return InteriorSpec{p, theta, zeta};
  return BoundaryArcSpec{p, zeta / std::abs(zeta)};
}

ExtremalSpec build_family_function(const CanonicalParams& p, Complex lambda, Complex alpha) {
  if (!is_finite(lambda) || std::abs(lambda) > 1.0 + kUnitSlack)
    throw std::invalid_argument("build_family_function: need |lambda| <= 1");
  if (!is_finite(alpha) || std::abs(alpha) > 1.0 + kUnitSlack)
    throw std::invalid_argument("build_family_function: need |alpha| <= 1");
  return FamilySpec{p, lambda, alpha};
}

Jet2 eval_jet(const ExtremalSpec& spec, const Jet2& z) {
  return std::visit(
      Overloaded{
          [&](const InteriorSpec& s) {
            return eval_family(s.params, s.zeta, std::polar(1.0, s.theta), z);
          },
          [&](const BoundaryArcSpec& s) {
            const MoebiusParam pull{-s.params.r()};
            const MoebiusParam push{s.params.s() / s.params.r()};
            return z * moebius_jet(push, s.zeta * moebius_jet(pull, z));
          },
          [&](const FamilySpec& s) { return eval_family(s.params, s.lambda, s.alpha, z); },
      },
      spec);
}

Jet2 eval_jet(const ExtremalSpec& spec, Complex z) { return eval_jet(spec, Jet2::identity(z)); }

MembershipReport validate_membership(const ExtremalSpec& spec, double grid_radius, int grid_n) {
  if (!(grid_radius > 0.0) || !(grid_radius < 1.0))
    throw std::invalid_argument("validate_membership: grid_radius must lie in (0, 1)");
  if (grid_n < 64) throw std::invalid_argument("validate_membership: grid_n must be >= 64");

  const CanonicalParams p = std::visit([](const auto& s) { return s.params; }, spec);

  MembershipReport rep{};
  rep.f0 = eval_jet(spec, Complex{0.0, 0.0}).v;
  rep.f_r_error = std::abs(eval_jet(spec, Complex{p.r(), 0.0}).v - Complex{p.s(), 0.0});

  std::vector<double> radii;
  for (int k = 1; k <= 9; ++k) radii.push_back(0.1 * k);
  radii.push_back(0.99);
  radii.push_back(grid_radius);

  double sup_mod = 0.0;
  for (double rad : radii) {
    for (int k = 0; k < grid_n; ++k) {
      const Complex z = std::polar(rad, 2.0 * kPi * k / grid_n);
      sup_mod = std::max(sup_mod, std::abs(eval_jet(spec, z).v));
    }
  }
  rep.sup_mod = sup_mod;
  rep.passed = std::abs(rep.f0) <= 1e-12 && rep.f_r_error <= 1e-12 && rep.sup_mod <= 1.0 + 1e-9;
  return rep;
}

double max_attainment_error(const CanonicalParams& p, int n_theta) {
  if (n_theta < 1) throw std::invalid_argument("max_attainment_error: n_theta must be >= 1");
  const Complex at{p.r(), 0.0};
  double worst = 0.0;
  for (int k = 1; k <= n_theta; ++k) {
    const double theta = static_cast<double>(2 * k - n_theta) * (kPi / n_theta);
    const ExtremalSpec spec = build_extremal(p, theta);
    const BoundaryPoint bp = boundary_point(p, theta);
    worst = std::max(worst, std::abs(eval_jet(spec, at).d2 - bp.gamma));
  }
  return worst;
}

}  // namespace vregion
