#pragma once

#include <variant>

#include "vregion/region.hpp"

namespace vregion {

// ---------------------------------------------------------------------------
// Extremal functions
//
// Boundary points of the region are attained by explicit compositions of
// Moebius factors. Specs stay symbolic (parameters only); evaluation runs the
// composition through order-2 jets, so f, f' and f'' come out exact up to
// rounding.
//
//   interior zeta:   f(z) = z T_{s/r}( T_{-r}(z) * T_{zeta}( u T_{-r}(z) ) ),
//                    u = e^{i theta}
//   unimodular zeta: f(z) = z T_{s/r}( zeta * T_{-r}(z) )
//   two-parameter:   f(z) = z T_{s/r}( T_{-r}(z) * T_{lambda}( alpha T_{-r}(z) ) )
//
// The interior form is the two-parameter family at (lambda, alpha) =
// (zeta_theta, e^{i theta}); its second derivative at r lands on the boundary
// support point gamma(theta).
// ---------------------------------------------------------------------------

/// Interior-index extremal; |zeta| < 1 - 1e-12.
struct InteriorSpec {
  CanonicalParams params;
  double theta;
  Complex zeta;
};

/// Unimodular-index extremal; |zeta| = 1 within 1e-12.
struct BoundaryArcSpec {
  CanonicalParams params;
  Complex zeta;
};

/// Two-parameter family over (lambda, alpha) in closed-disk x closed-disk;
/// boundary attainment uses |alpha| = 1.
struct FamilySpec {
  CanonicalParams params;
  Complex lambda;
  Complex alpha;
};

using ExtremalSpec = std::variant<InteriorSpec, BoundaryArcSpec, FamilySpec>;

struct MembershipReport {
  Complex f0;         // value at 0, must vanish
  double f_r_error;   // |f(r) - s|
  double sup_mod;     // max |f| over the validation grid
  bool passed;        // |f0| <= 1e-12 && f_r_error <= 1e-12 && sup_mod <= 1 + 1e-9
};

/// Interior-form builder; throws std::domain_error when the dichotomy at
/// theta lands on the unit circle (|zeta_theta| >= 1 - 1e-12).
ExtremalSpec build_extremal_interior(const CanonicalParams& p, double theta);

/// Unimodular-form builder; throws std::domain_error when the dichotomy at
/// theta yields an interior index instead.
ExtremalSpec build_extremal_boundary(const CanonicalParams& p, double theta);

/// Regime-dispatching builder: picks the form the dichotomy at theta calls for.
ExtremalSpec build_extremal(const CanonicalParams& p, double theta);

ExtremalSpec build_family_function(const CanonicalParams& p, Complex lambda, Complex alpha);

/// Jet of the synthesized function at z (|z| < 1).
Jet2 eval_jet(const ExtremalSpec& spec, Complex z);

/// Jet of the synthesized function composed with the map whose jet is z;
/// lets callers evaluate rotated copies g(z) = u2 f(u1 z) exactly.
Jet2 eval_jet(const ExtremalSpec& spec, const Jet2& z);

/// Checks f(0) = 0, f(r) = s and sup |f| <= 1 on concentric evaluation rings
/// (radii 0.1..0.9, 0.99 and grid_radius, each sampled at grid_n angles).
MembershipReport validate_membership(const ExtremalSpec& spec,
                                     double grid_radius = 0.999,
                                     int grid_n = 512);

/// Max over n_theta uniform directions of |f''(r) - gamma(theta)| with f the
/// dispatched extremal; the cross-check between synthesis and support
/// parametrization.
double max_attainment_error(const CanonicalParams& p, int n_theta);

}  // namespace vregion
