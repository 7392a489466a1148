#pragma once

#include "vregion/region.hpp"

namespace vregion {

/// Validated general parameter pair: 0 < |z0| < 1 and |w0| < |z0|.
class GeneralParams {
 public:
  GeneralParams(Complex z0, Complex w0);
  Complex z0() const { return z0_; }
  Complex w0() const { return w0_; }

 private:
  Complex z0_;
  Complex w0_;
};

/// Canonical data plus the unimodular phase that transports the canonical
/// region back: region(z0, w0) = phase * region(r, s) with
/// phase = e^{i (arg w0 - 2 arg z0)}. For w0 = 0 the convention arg(0) := 0
/// applies; the s = 0 region is a disk centered at the origin, so any phase
/// choice transports it correctly.
struct Reduction {
  CanonicalParams canonical;
  Complex phase;
};

Reduction to_canonical(const GeneralParams& g);

/// Transport a canonical-region point to the general-parameter region.
Complex map_back(const Reduction& red, Complex canonical_point);

}  // namespace vregion
