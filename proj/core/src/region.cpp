#include "vregion/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vregion/parallel.hpp"

namespace vregion {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

// |x e^{i theta} - s| with the trig evaluated once by the caller.
double chord(double x, double s, double cos_t, double sin_t) {
  return std::hypot(x * cos_t - s, x * sin_t);
}

}  // namespace

CanonicalParams::CanonicalParams(double r, double s) : r_(r), s_(s) {
  if (!std::isfinite(r) || !std::isfinite(s) || !(s >= 0.0) || !(s < r) || !(r < 1.0))
    throw std::invalid_argument("CanonicalParams: need 0 <= s < r < 1");
}

double amplitude(const CanonicalParams& p) {
  const double r = p.r(), s = p.s();
  const double one_minus_r2 = 1.0 - r * r;
  return 2.0 * (r * r - s * s) / (r * r * one_minus_r2 * one_minus_r2);
}

double tolerance_scale(const CanonicalParams& p) {
  return amplitude(p) * (1.0 + p.s() + p.r());
}

Complex c_s(double s, Complex zeta) { return zeta * (1.0 - s * zeta); }

Complex c_s(const CanonicalParams& p, Complex zeta) { return c_s(p.s(), zeta); }

double rho_r(double r, Complex zeta) {
  const double slack = 1.0 - std::norm(zeta);
  if (slack < -2e-12) throw std::invalid_argument("rho_r: |zeta| exceeds 1");
  return r * std::max(0.0, slack);
}

double rho_r(const CanonicalParams& p, Complex zeta) { return rho_r(p.r(), zeta); }

double h_theta(const CanonicalParams& p, double theta, double x) {
  const double s = p.s();
  if (!(x > s)) throw std::domain_error("h_theta: requires x > s");
  return chord(x, s, std::cos(theta), std::sin(theta)) / (2.0 * (x * x - s * s));
}

RootResult solve_r_theta(const CanonicalParams& p, double theta) {
  const double r = p.r(), s = p.s();
  const double cos_t = std::cos(theta), sin_t = std::sin(theta);
  const double target = 2.0 * (r * r - s * s);
  if (chord(r, s, cos_t, sin_t) < target) return {r, true};

  // h(x) = chord / (2 (x^2 - s^2)) crosses 1 exactly once; the chord bounds
  // x - s <= chord <= x + s pin the root inside [1/2 - s, 1/2 + s], and the
  // case condition puts it at or above r.
  auto h = [&](double x) { return chord(x, s, cos_t, sin_t) / (2.0 * (x * x - s * s)); };
  double lo = std::max(r, 0.5 - s);
  double hi = std::max(0.5 + s, lo);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket collapsed to adjacent doubles
    if (h(mid) >= 1.0)
      lo = mid;
    else
      hi = mid;
  }
  const double root = std::abs(h(lo) - 1.0) <= std::abs(h(hi) - 1.0) ? lo : hi;
  return {root, false};
}

namespace {

Complex zeta_from_root(const CanonicalParams& p, double theta, const RootResult& root) {
  const double x = root.r_theta, s = p.s();
  return (std::polar(x, theta) - Complex{s, 0.0}) / (2.0 * (x * x - s * s));
}

}  // namespace

Complex zeta_theta(const CanonicalParams& p, double theta) {
  return zeta_from_root(p, theta, solve_r_theta(p, theta));
}

Complex support_point(const CanonicalParams& p, double theta) {
  const RootResult root = solve_r_theta(p, theta);
  const Complex zeta = zeta_from_root(p, theta, root);
  if (root.interior) return c_s(p, zeta) + rho_r(p, zeta) * std::polar(1.0, theta);
  return c_s(p, zeta);
}

BoundaryPoint boundary_point(const CanonicalParams& p, double theta) {
  const RootResult root = solve_r_theta(p, theta);
  const Complex zeta = zeta_from_root(p, theta, root);
  const Complex v = root.interior
                        ? c_s(p, zeta) + rho_r(p, zeta) * std::polar(1.0, theta)
                        : c_s(p, zeta);
  return {theta, root.r_theta, zeta, v, amplitude(p) * v,
          root.interior ? ArcKind::CircularArc : ArcKind::CsArc};
}

Regime classify_regime(const CanonicalParams& p) {
  const double r = p.r(), s = p.s();
  if (r - s >= 0.5) return {RegimeKind::FullCircle, std::nullopt};
  if (r + s <= 0.5) return {RegimeKind::ConvexJordan, std::nullopt};
  const double d2 = r * r - s * s;
  const double ratio = (r * r + s * s - 4.0 * d2 * d2) / (2.0 * s * r);
  return {RegimeKind::Mixed, std::acos(std::clamp(ratio, -1.0, 1.0))};
}

Complex circle_case_point(const CanonicalParams& p, Complex zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > 1e-12)
    throw std::domain_error("circle_case_point: needs |zeta| = 1");
  const double r = p.r(), s = p.s();
  const double one_minus_r2 = 1.0 - r * r;
  const double d2 = r * r - s * s;
  return ((1.0 + 4.0 * d2) * r * zeta - Complex{s, 0.0}) /
         (2.0 * r * r * one_minus_r2 * one_minus_r2);
}

RegionPolyline boundary_polyline(const CanonicalParams& p, int samples) {
  if (samples < 16) throw std::invalid_argument("boundary_polyline: samples must be >= 16");

  // (2k - n) pi / n for k = 1..n covers (-pi, pi] and makes theta and -theta
  // exact negations of each other, which the conjugation symmetry check uses.
  std::vector<double> thetas;
  thetas.reserve(static_cast<std::size_t>(samples) + 2);
  for (int k = 1; k <= samples; ++k)
    thetas.push_back(static_cast<double>(2 * k - samples) * (kPi / samples));

  const Regime regime = classify_regime(p);
  std::vector<std::size_t> joint_indices;
  if (regime.kind == RegimeKind::Mixed) {
    for (double t0 : {-*regime.theta0, *regime.theta0}) {
      auto it = std::lower_bound(thetas.begin(), thetas.end(), t0);
      if (it != thetas.end() && std::abs(*it - t0) < 1e-13) continue;
      if (it != thetas.begin() && std::abs(*(it - 1) - t0) < 1e-13) continue;
      joint_indices.push_back(static_cast<std::size_t>(it - thetas.begin()));
      thetas.insert(it, t0);
    }
  }

  RegionPolyline poly{p, {}, true};
  poly.points.resize(thetas.size());
  auto* pts = poly.points.data();
  const auto* ths = thetas.data();
  parallel_for(thetas.size(), [&p, pts, ths](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) pts[i] = boundary_point(p, ths[i]);
  });

  // The inserted joints sit exactly on the dichotomy's equality case; pin
  // their kind so rounding cannot flip which arc claims them.
  for (std::size_t j : joint_indices) poly.points[j].kind = ArcKind::CsArc;
  return poly;
}

Disk first_derivative_disk(Complex z0, Complex w0) {
  const double a = std::abs(z0);
  if (!is_finite(z0) || !is_finite(w0) || a <= 0.0 || a >= 1.0 || std::abs(w0) >= a)
    throw std::invalid_argument("first_derivative_disk: need 0 < |z0| < 1 and |w0| < |z0|");
  return {w0 / z0, (std::norm(z0) - std::norm(w0)) / (a * (1.0 - a * a))};
}

Disk rogosinski_disk(Complex z0, Complex mu) {
  const double a = std::abs(z0);
  if (!is_finite(z0) || !is_finite(mu) || a <= 0.0 || a >= 1.0 || std::abs(mu) > 1.0)
    throw std::invalid_argument("rogosinski_disk: need 0 < |z0| < 1 and |mu| <= 1");
  const double den = 1.0 - std::norm(z0) * std::norm(mu);
  return {z0 * mu * (1.0 - std::norm(z0)) / den, (1.0 - std::norm(mu)) * std::norm(z0) / den};
}

GammaCurveReport classify_gamma_curve(double s) {
  if (!std::isfinite(s) || s < 0.0 || s >= 1.0)
    throw std::invalid_argument("classify_gamma_curve: need 0 <= s < 1");

  // G(phi) = e^{i phi} - s e^{2 i phi}; witnesses are sampled from the exact
  // derivative expressions G' = i e^{i phi} - 2 i s e^{2 i phi} and
  // G'' = -e^{i phi} + 4 s e^{2 i phi}.
  constexpr int kSamples = 4096;
  double min_cross = std::numeric_limits<double>::infinity();
  double min_speed = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kSamples; ++k) {
    const double phi = 2.0 * kPi * k / kSamples;
    const Complex e1 = std::polar(1.0, phi);
    const Complex e2 = std::polar(1.0, 2.0 * phi);
    const Complex d1 = Complex{0.0, 1.0} * e1 - Complex{0.0, 2.0 * s} * e2;
    const Complex d2 = -e1 + 4.0 * s * e2;
    min_cross = std::min(min_cross, cross(d1, d2));
    min_speed = std::min(min_speed, std::abs(d1));
  }

  GammaCurveReport rep{GammaCurveKind::Convex, min_cross, min_speed,
                       std::abs(1.0 - 2.0 * s), std::nullopt, std::nullopt};
  if (s <= 0.25) {
    rep.kind = GammaCurveKind::Convex;
  } else if (s < 0.5) {
    rep.kind = GammaCurveKind::SmoothNonConvex;
  } else if (s == 0.5) {
    rep.kind = GammaCurveKind::Cusp;
  } else {
    rep.kind = GammaCurveKind::SelfIntersecting;
    const double phi = std::acos(1.0 / (2.0 * s));
    rep.self_intersection_phi = phi;
    rep.self_intersection_point = c_s(s, std::polar(1.0, phi));
  }
  return rep;
}

}  // namespace vregion
