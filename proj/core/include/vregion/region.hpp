#pragma once

#include <optional>
#include <vector>

#include "vregion/jet.hpp"

namespace vregion {

// ---------------------------------------------------------------------------
// Canonical parameters and the region boundary
//
// The canonical pair (r, s), 0 <= s < r < 1, describes the family of analytic
// self-maps f of the unit disk with f(0) = 0 and f(r) = s. The set of
// attainable second derivatives f''(r) is A(r,s) times the union of the
// closed disks D(c_s(zeta), rho_r(zeta)) over |zeta| <= 1, where
//     c_s(zeta) = zeta (1 - s zeta),    rho_r(zeta) = r (1 - |zeta|^2).
// This header exposes the amplitude, the disk data, the support-point
// parametrization of the boundary, and the regime classification.
// ---------------------------------------------------------------------------

/// Validated canonical parameter pair, 0 <= s < r < 1.
class CanonicalParams {
 public:
  CanonicalParams(double r, double s);
  double r() const { return r_; }
  double s() const { return s_; }

 private:
  double r_;
  double s_;
};

enum class RegimeKind { ConvexJordan, FullCircle, Mixed };

struct Regime {
  RegimeKind kind;
  std::optional<double> theta0;  // opening angle of the circular arc, Mixed only
};

enum class ArcKind { CircularArc, CsArc };

/// One support point of the boundary at outward normal direction e^{i theta}.
struct BoundaryPoint {
  double theta;
  double r_theta;  // radial root used by the parametrization
  Complex zeta;    // maximizing disk index, |zeta| <= 1
  Complex v;       // support point of the normalized region
  Complex gamma;   // amplitude * v, support point of the full region
  ArcKind kind;
};

/// Closed boundary polyline; points ordered by strictly increasing theta
/// covering (-pi, pi].
struct RegionPolyline {
  CanonicalParams params;
  std::vector<BoundaryPoint> points;
  bool closed = true;
};

struct Disk {
  Complex center;
  double radius;
};

/// A(r, s) = 2 (r^2 - s^2) / (r^2 (1 - r^2)^2), the positive scale relating
/// the normalized region to the second-derivative region.
double amplitude(const CanonicalParams& p);

/// amplitude * (1 + s + r): the length scale every region tolerance is
/// expressed against.
double tolerance_scale(const CanonicalParams& p);

Complex c_s(double s, Complex zeta);
Complex c_s(const CanonicalParams& p, Complex zeta);

double rho_r(double r, Complex zeta);
double rho_r(const CanonicalParams& p, Complex zeta);

/// h_theta(x) = |x e^{i theta} - s| / (2 (x^2 - s^2)) for x > s; strictly
/// decreasing in x, which makes the radial root below unique.
double h_theta(const CanonicalParams& p, double theta, double x);

struct RootResult {
  double r_theta;
  bool interior;  // true when |r e^{i theta} - s| < 2 (r^2 - s^2), so r_theta = r
};

/// Dichotomy at direction theta: either the full-radius disk index is already
/// interior (r_theta = r), or h_theta(x) = 1 is solved by bisection on
/// [max(r, 1/2 - s), 1/2 + s].
RootResult solve_r_theta(const CanonicalParams& p, double theta);

/// zeta_theta = (r_theta e^{i theta} - s) / (2 (r_theta^2 - s^2)); strictly
/// inside the unit circle iff the dichotomy took the interior branch.
Complex zeta_theta(const CanonicalParams& p, double theta);

/// Support point of the normalized region in direction theta:
/// c_s(zeta_theta) + rho_r(zeta_theta) e^{i theta} on the interior branch,
/// c_s(zeta_theta) otherwise.
Complex support_point(const CanonicalParams& p, double theta);

/// Full boundary datum at direction theta, gamma = amplitude * v.
BoundaryPoint boundary_point(const CanonicalParams& p, double theta);

/// Shape trichotomy: FullCircle when r - s >= 1/2 (checked first, so the
/// overlap point (1/2, 0) classifies as FullCircle), ConvexJordan when
/// r + s <= 1/2, Mixed otherwise with
/// theta0 = arccos((r^2 + s^2 - 4 (r^2 - s^2)^2) / (2 s r)).
Regime classify_regime(const CanonicalParams& p);

/// FullCircle-regime boundary circle evaluated at |zeta| = 1:
/// ((1 + 4 (r^2 - s^2)) r zeta - s) / (2 r^2 (1 - r^2)^2).
Complex circle_case_point(const CanonicalParams& p, Complex zeta);

/// Uniform boundary sampling with `samples` >= 16 directions over (-pi, pi];
/// in the Mixed regime the exact arc endpoints +-theta0 are inserted so the
/// two parametrizations meet at stored vertices.
RegionPolyline boundary_polyline(const CanonicalParams& p, int samples);

/// First-derivative variability disk for general parameters:
/// center w0/z0, radius (|z0|^2 - |w0|^2) / (|z0| (1 - |z0|^2)).
Disk first_derivative_disk(Complex z0, Complex w0);

/// Second-coefficient disk at fixed f'(0) = mu:
/// center z0 mu (1 - |z0|^2) / (1 - |z0|^2 |mu|^2),
/// radius (1 - |mu|^2) |z0|^2 / (1 - |z0|^2 |mu|^2).
Disk rogosinski_disk(Complex z0, Complex mu);

// ---------------------------------------------------------------------------
// Shape of the curve Gamma_s = c_s(unit circle)
// ---------------------------------------------------------------------------

enum class GammaCurveKind { Convex, SmoothNonConvex, Cusp, SelfIntersecting };

/// Classification of Gamma_s with numerical witnesses. Thresholds on s are
/// exact; the witnesses corroborate: min_cross is the minimum of
/// Im(conj(G') G'') over a dense angle grid (single-signed iff convex),
/// min_speed the minimum of |G'| (zero at the cusp), cusp_derivative the exact
/// |c_s'(1)| = |1 - 2s|, and the self-intersection pair (+phi, -phi) maps to
/// the single real point s when s > 1/2.
struct GammaCurveReport {
  GammaCurveKind kind;
  double min_cross;
  double min_speed;
  double cusp_derivative;
  std::optional<double> self_intersection_phi;
  std::optional<Complex> self_intersection_point;
};

GammaCurveReport classify_gamma_curve(double s);

}  // namespace vregion
