#include "vregion/reduction.hpp"

#include <cmath>

namespace vregion {

GeneralParams::GeneralParams(Complex z0, Complex w0) : z0_(z0), w0_(w0) {
  if (!is_finite(z0) || !is_finite(w0))
    throw std::invalid_argument("GeneralParams: non-finite input");
  const double r = std::abs(z0);
  if (!(r > 0.0) || !(r < 1.0))
    throw std::invalid_argument("GeneralParams: need 0 < |z0| < 1");
  if (!(std::abs(w0) < r))
    throw std::invalid_argument("GeneralParams: need |w0| < |z0|");
}

Reduction to_canonical(const GeneralParams& g) {
  const double r = std::abs(g.z0());
  const double s = std::abs(g.w0());
  const double arg_z0 = std::arg(g.z0());
  const double arg_w0 = s == 0.0 ? 0.0 : std::arg(g.w0());
  return {CanonicalParams{r, s}, std::polar(1.0, arg_w0 - 2.0 * arg_z0)};
}

Complex map_back(const Reduction& red, Complex canonical_point) {
  return red.phase * canonical_point;
}

}  // namespace vregion
