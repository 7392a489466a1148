#include "vregion/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "vregion/parallel.hpp"

namespace vregion {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double point_segment_distance(Complex q, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(q - a);
  double t = ((q - a).real() * ab.real() + (q - a).imag() * ab.imag()) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(q - (a + t * ab));
}

void check_same_params(const CanonicalParams& a, const CanonicalParams& b) {
  if (a.r() != b.r() || a.s() != b.s())
    throw std::invalid_argument("cloud and boundary were built for different parameters");
}

}  // namespace

Complex family_point(const CanonicalParams& p, Complex lambda, Complex alpha) {
  return amplitude(p) * (c_s(p, lambda) + rho_r(p, lambda) * alpha);
}

SampleCloud sample_region(const CanonicalParams& p, int rings, int angles, int alphas) {
  if (rings < 2 || angles < 8 || alphas < 8)
    throw std::invalid_argument("sample_region: need rings >= 2, angles >= 8, alphas >= 8");

  SampleCloud cloud{p, {}, rings, angles, alphas, false, 0};
  cloud.points.resize(static_cast<std::size_t>(rings) * angles * alphas);

  std::vector<Complex> alpha_roots(static_cast<std::size_t>(alphas));
  for (int j = 0; j < alphas; ++j) alpha_roots[j] = std::polar(1.0, 2.0 * kPi * j / alphas);

  const double amp = amplitude(p);
  const double r = p.r(), s = p.s();
  auto* out = cloud.points.data();
  const auto* roots = alpha_roots.data();
  const std::size_t lambda_count = static_cast<std::size_t>(rings) * angles;
  parallel_for(lambda_count, [=](std::size_t b, std::size_t e) {
    for (std::size_t m = b; m < e; ++m) {
      const int k = static_cast<int>(m) / angles;   // ring index, 0-based
      const int a = static_cast<int>(m) % angles;
      const double rad = static_cast<double>(k + 1) / rings;  // outermost exactly 1
      const Complex lambda = std::polar(rad, 2.0 * kPi * a / angles);
      const Complex c = c_s(s, lambda);
      const double rho = rho_r(r, lambda);
      for (int j = 0; j < alphas; ++j)
        out[m * static_cast<std::size_t>(alphas) + j] = amp * (c + rho * roots[j]);
    }
  });
  return cloud;
}

SampleCloud sample_region_random(const CanonicalParams& p, int n_lambda, int alphas,
                                 std::uint64_t seed) {
  if (n_lambda < 1 || alphas < 8)
    throw std::invalid_argument("sample_region_random: need n_lambda >= 1, alphas >= 8");

  SampleCloud cloud{p, {}, 0, 0, alphas, true, seed};
  cloud.points.reserve(static_cast<std::size_t>(n_lambda) * alphas);

  std::vector<Complex> alpha_roots(static_cast<std::size_t>(alphas));
  for (int j = 0; j < alphas; ++j) alpha_roots[j] = std::polar(1.0, 2.0 * kPi * j / alphas);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double amp = amplitude(p);
  for (int m = 0; m < n_lambda; ++m) {
    const Complex lambda = std::polar(std::sqrt(uni(rng)), 2.0 * kPi * uni(rng));
    const Complex c = c_s(p, lambda);
    const double rho = rho_r(p, lambda);
    for (int j = 0; j < alphas; ++j) cloud.points.push_back(amp * (c + rho * alpha_roots[j]));
  }
  return cloud;
}

std::vector<std::size_t> convex_hull_indices(const std::vector<Complex>& pts) {
  if (pts.size() < 3) throw std::domain_error("convex_hull_indices: fewer than 3 points");

  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (pts[i].real() != pts[j].real() || pts[i].imag() != pts[j].imag())
      return lex_less(pts[i], pts[j]);
    return i < j;  // duplicates keep a stable order
  });

  auto build = [&](auto first, auto last) {
    std::vector<std::size_t> chain;
    for (auto it = first; it != last; ++it) {
      while (chain.size() >= 2 &&
             cross(pts[chain.back()] - pts[chain[chain.size() - 2]],
                   pts[*it] - pts[chain.back()]) <= 0.0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };

  std::vector<std::size_t> lower = build(order.begin(), order.end());
  std::vector<std::size_t> upper = build(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.size() < 3) throw std::domain_error("convex_hull_indices: degenerate hull");
  return lower;
}

VerificationReport support_check(const SampleCloud& cloud, const RegionPolyline& boundary,
                                 double tol) {
  check_same_params(cloud.params, boundary.params);
  if (boundary.points.empty()) throw std::invalid_argument("support_check: empty boundary");

  // max over samples of a linear functional is attained on the hull, so the
  // inner loop only visits hull vertices; the reported offender is still a
  // cloud index.
  const std::vector<std::size_t> hull = convex_hull_indices(cloud.points);

  const std::size_t nb = boundary.points.size();
  std::vector<double> violation(nb);
  std::vector<std::size_t> offender(nb);
  auto* vio = violation.data();
  auto* off = offender.data();
  parallel_for(nb, [&](std::size_t b, std::size_t e) {
    for (std::size_t bi = b; bi < e; ++bi) {
      const BoundaryPoint& bp = boundary.points[bi];
      const Complex dir = std::polar(1.0, -bp.theta);
      const double support = (bp.gamma * dir).real();
      double best = -std::numeric_limits<double>::infinity();
      std::size_t best_idx = 0;
      for (std::size_t hi : hull) {
        const double val = (cloud.points[hi] * dir).real();
        if (val > best) {
          best = val;
          best_idx = hi;
        }
      }
      vio[bi] = best - support;
      off[bi] = best_idx;
    }
  });

  std::size_t worst = 0;
  for (std::size_t bi = 1; bi < nb; ++bi)
    if (violation[bi] > violation[worst]) worst = bi;

  VerificationReport rep;
  rep.max_support_violation = violation[worst];
  rep.worst_theta = boundary.points[worst].theta;
  rep.worst_sample = offender[worst];
  rep.n_samples = cloud.points.size();
  rep.scale = tolerance_scale(cloud.params);
  rep.tol_in = tol;
  rep.support_passed = rep.max_support_violation <= tol * rep.scale;
  rep.passed = rep.support_passed;
  return rep;
}

double hull_gap(const SampleCloud& cloud, const RegionPolyline& boundary) {
  check_same_params(cloud.params, boundary.params);
  const std::vector<std::size_t> hull = convex_hull_indices(cloud.points);
  std::vector<Complex> hp(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) hp[i] = cloud.points[hull[i]];

  const std::size_t nb = boundary.points.size();
  std::vector<double> gaps(nb, 0.0);
  auto* out = gaps.data();
  parallel_for(nb, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const Complex q = boundary.points[i].gamma;
      bool inside = true;
      double dist = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < hp.size(); ++k) {
        const Complex a = hp[k];
        const Complex bpt = hp[(k + 1) % hp.size()];
        if (cross(bpt - a, q - a) < 0.0) inside = false;
        dist = std::min(dist, point_segment_distance(q, a, bpt));
      }
      out[i] = inside ? 0.0 : dist;
    }
  });
  return *std::max_element(gaps.begin(), gaps.end());
}

bool contains(const RegionPolyline& boundary, Complex point, double tol) {
  if (boundary.points.empty()) throw std::invalid_argument("contains: empty boundary");
  const double allowance = tol * tolerance_scale(boundary.params);
  for (const BoundaryPoint& bp : boundary.points) {
    const Complex dir = std::polar(1.0, -bp.theta);
    if (((point - bp.gamma) * dir).real() > allowance) return false;
  }
  return true;
}

VerificationReport run_verification(const CanonicalParams& p, const VerifyOptions& opts) {
  RegionPolyline boundary = boundary_polyline(p, opts.boundary_samples);
  if (opts.gamma_perturb != 0.0) {
    for (BoundaryPoint& bp : boundary.points) {
      bp.v *= 1.0 - opts.gamma_perturb;
      bp.gamma *= 1.0 - opts.gamma_perturb;
    }
  }

  const SampleCloud cloud =
      opts.seed ? sample_region_random(p, opts.rings * opts.angles, opts.alphas, *opts.seed)
                : sample_region(p, opts.rings, opts.angles, opts.alphas);

  VerificationReport rep = support_check(cloud, boundary, opts.tol_in);
  rep.hull_gap = hull_gap(cloud, boundary);
  rep.diameter = region_diameter(boundary);
  rep.tol_fill = opts.tol_fill;
  rep.fill_passed = rep.hull_gap <= opts.tol_fill * rep.diameter;
  rep.passed = rep.support_passed && rep.fill_passed;
  return rep;
}

bool polyline_is_simple(const RegionPolyline& poly) {
  const std::size_t n = poly.points.size();
  if (n < 3) return false;

  struct Seg {
    Complex a, b;
    double min_x, max_x;
    std::size_t idx;
  };
  std::vector<Seg> segs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = poly.points[i].gamma;
    const Complex b = poly.points[(i + 1) % n].gamma;
    segs[i] = {a, b, std::min(a.real(), b.real()), std::max(a.real(), b.real()), i};
  }
  std::sort(segs.begin(), segs.end(), [](const Seg& x, const Seg& y) { return x.min_x < y.min_x; });

  auto adjacent = [n](std::size_t i, std::size_t j) {
    return i == j || (i + 1) % n == j || (j + 1) % n == i;
  };
  auto proper_cross = [](const Seg& s, const Seg& t) {
    const double d1 = cross(s.b - s.a, t.a - s.a);
    const double d2 = cross(s.b - s.a, t.b - s.a);
    const double d3 = cross(t.b - t.a, s.a - t.a);
    const double d4 = cross(t.b - t.a, s.b - t.a);
    if (((d1 > 0.0) != (d2 > 0.0)) && ((d3 > 0.0) != (d4 > 0.0)) && d1 != 0.0 && d2 != 0.0 &&
        d3 != 0.0 && d4 != 0.0)
      return true;
    // Collinear touch: only endpoint coincidence of adjacent segments is
    // legitimate, and adjacency is filtered before this test runs.
    auto on = [](const Seg& u, Complex q) {
      return cross(u.b - u.a, q - u.a) == 0.0 &&
             std::min(u.a.real(), u.b.real()) <= q.real() &&
             q.real() <= std::max(u.a.real(), u.b.real()) &&
             std::min(u.a.imag(), u.b.imag()) <= q.imag() &&
             q.imag() <= std::max(u.a.imag(), u.b.imag());
    };
    return on(s, t.a) || on(s, t.b) || on(t, s.a) || on(t, s.b);
  };

  // x-interval sweep: each segment only meets earlier segments whose
  // x-interval still overlaps. Near-linear for convex loops.
  std::vector<const Seg*> active;
  for (const Seg& s : segs) {
    std::erase_if(active, [&](const Seg* t) { return t->max_x < s.min_x; });
    for (const Seg* t : active) {
      if (adjacent(s.idx, t->idx)) continue;
      if (proper_cross(s, *t)) return false;
    }
    active.push_back(&s);
  }
  return true;
}

double polyline_min_turn_cross(const RegionPolyline& poly) {
  const std::size_t n = poly.points.size();
  double min_cross = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex a = poly.points[i].gamma;
    const Complex b = poly.points[(i + 1) % n].gamma;
    const Complex c = poly.points[(i + 2) % n].gamma;
    min_cross = std::min(min_cross, cross(b - a, c - b));
  }
  return min_cross;
}

double polyline_conjugation_defect(const RegionPolyline& poly) {
  // Vertices come sorted by theta and the grids are built so theta and
  // -theta are exact negations; match each negative-direction vertex with its
  // mirror by binary search.
  const auto& pts = poly.points;
  double defect = 0.0;
  for (const BoundaryPoint& bp : pts) {
    if (bp.theta >= 0.0) break;
    const double want = -bp.theta;
    auto it = std::lower_bound(
        pts.begin(), pts.end(), want,
        [](const BoundaryPoint& q, double val) { return q.theta < val; });
    if (it != pts.end() && std::abs(it->theta - want) <= 1e-15)
      defect = std::max(defect, std::abs(it->gamma - std::conj(bp.gamma)));
  }
  return defect;
}

bool origin_strictly_inside(const RegionPolyline& poly) {
  for (const BoundaryPoint& bp : poly.points)
    if ((bp.gamma * std::polar(1.0, -bp.theta)).real() <= 0.0) return false;
  return true;
}

double region_diameter(const RegionPolyline& poly) {
  // Hull first, then the exact pairwise max over hull vertices; the vertex
  // counts in play keep the quadratic scan cheap.
  std::vector<Complex> pts(poly.points.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = poly.points[i].gamma;
  const std::vector<std::size_t> hull = convex_hull_indices(pts);
  double best = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i)
    for (std::size_t j = i + 1; j < hull.size(); ++j)
      best = std::max(best, std::abs(pts[hull[i]] - pts[hull[j]]));
  return best;
}

}  // namespace vregion
