#pragma once

#include <cstdint>
#include <vector>

#include "vregion/region.hpp"

namespace vregion {

// ---------------------------------------------------------------------------
// Brute-force verification
//
// The oracle never reuses the boundary parametrization: it samples the region
// as amplitude * (c_s(lambda) + rho_r(lambda) alpha) over a (lambda, alpha)
// grid and checks that sample cloud against the claimed boundary with support
// inequalities and a convex hull. The two directions are
//   soundness:  no sample escapes any supporting half-plane of the polyline,
//   tightness:  the polyline does not overshoot the hull of the samples.
// ---------------------------------------------------------------------------

struct SampleCloud {
  CanonicalParams params;
  std::vector<Complex> points;
  int rings = 0;    // 0 in randomized mode
  int angles = 0;
  int alphas = 0;
  bool randomized = false;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  double max_support_violation = 0.0;
  double worst_theta = 0.0;        // normal direction attaining the violation
  std::size_t worst_sample = 0;    // cloud index attaining it
  double hull_gap = 0.0;
  double diameter = 0.0;
  std::size_t n_samples = 0;
  double tol_in = 1e-9;            // violation allowance, in units of scale
  double tol_fill = 0.02;          // hull-gap allowance, fraction of diameter
  double scale = 0.0;
  bool support_passed = false;
  bool fill_passed = false;
  bool passed = false;
};

/// One sample of the two-parameter family: amplitude * (c_s(lambda) +
/// rho_r(lambda) alpha). The only formula the sampler uses.
Complex family_point(const CanonicalParams& p, Complex lambda, Complex alpha);

/// Deterministic grid: lambda on concentric rings of radii k/rings
/// (k = 1..rings, outermost exactly 1) times `angles` uniform angles, alpha
/// over the alphas-th roots of unity. rings >= 2, angles >= 8, alphas >= 8.
/// Identical arguments produce bitwise identical clouds.
SampleCloud sample_region(const CanonicalParams& p, int rings, int angles, int alphas);

/// Seeded randomized mode: n_lambda draws with radius sqrt(u), angle 2 pi v.
SampleCloud sample_region_random(const CanonicalParams& p, int n_lambda, int alphas,
                                 std::uint64_t seed);

/// Soundness direction. Reports the max over samples and polyline normals of
/// Re((p - gamma) e^{-i theta}); the maximum over samples is taken over the
/// cloud's convex hull vertices, which attain it exactly.
VerificationReport support_check(const SampleCloud& cloud, const RegionPolyline& boundary,
                                 double tol);

/// Tightness direction: max distance from polyline vertices to the convex
/// hull of the samples (0 for vertices inside the hull).
double hull_gap(const SampleCloud& cloud, const RegionPolyline& boundary);

/// Half-plane membership test against every polyline normal.
bool contains(const RegionPolyline& boundary, Complex point, double tol);

struct VerifyOptions {
  int rings = 100;
  int angles = 100;
  int alphas = 64;
  int boundary_samples = 2048;
  double tol_in = 1e-9;
  double tol_fill = 0.02;
  std::optional<std::uint64_t> seed;  // set: randomized lambda draws (rings*angles of them)
  double gamma_perturb = 0.0;         // debug: shrink gamma by this factor before checking
};

/// Full verification pipeline: sample, support-check, hull gap.
VerificationReport run_verification(const CanonicalParams& p, const VerifyOptions& opts);

// ---------------------------------------------------------------------------
// Plane-geometry helpers shared by the checks
// ---------------------------------------------------------------------------

/// Indices of the convex hull in counterclockwise order (monotone chain,
/// lexicographic ties); throws std::domain_error on a degenerate hull.
std::vector<std::size_t> convex_hull_indices(const std::vector<Complex>& pts);

/// True when no two non-adjacent polyline edges cross.
bool polyline_is_simple(const RegionPolyline& poly);

/// Minimum cross product of consecutive edge pairs; >= -tol certifies
/// convexity of the counterclockwise polyline.
double polyline_min_turn_cross(const RegionPolyline& poly);

/// Max |gamma(-theta) - conj(gamma(theta))| over matched +-theta vertex pairs.
double polyline_conjugation_defect(const RegionPolyline& poly);

/// True when every supporting half-plane keeps the origin strictly inside.
bool origin_strictly_inside(const RegionPolyline& poly);

/// Max pairwise vertex distance.
double region_diameter(const RegionPolyline& poly);

}  // namespace vregion
