#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

namespace vregion {

using Complex = std::complex<double>;

// Denominators below this magnitude count as poles. Every legitimate
// evaluation in this library stays strictly inside the unit disk, so a
// vanishing denominator signals caller misuse, not a limit case.
inline constexpr double kPoleEpsilon = 1e-14;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Order-2 Taylor data (value, first and second derivative) of an analytic
/// function at a single point. The point itself is tracked by the caller;
/// jets compose exactly under +, * and /, so derivative propagation through
/// nested Moebius maps needs no numerical differentiation.
struct Jet2 {
  Complex v{0.0, 0.0};
  Complex d1{0.0, 0.0};
  Complex d2{0.0, 0.0};

  static Jet2 constant(Complex c) { return {c, {0.0, 0.0}, {0.0, 0.0}}; }
  static Jet2 identity(Complex z) { return {z, {1.0, 0.0}, {0.0, 0.0}}; }
};

inline Jet2 operator+(const Jet2& x, const Jet2& y) {
  return {x.v + y.v, x.d1 + y.d1, x.d2 + y.d2};
}

inline Jet2 operator+(const Jet2& x, Complex c) { return {x.v + c, x.d1, x.d2}; }
inline Jet2 operator+(Complex c, const Jet2& x) { return x + c; }

inline Jet2 operator-(const Jet2& x) { return {-x.v, -x.d1, -x.d2}; }

// Leibniz rule through order 2.
inline Jet2 operator*(const Jet2& x, const Jet2& y) {
  return {x.v * y.v,
          x.d1 * y.v + x.v * y.d1,
          x.d2 * y.v + 2.0 * x.d1 * y.d1 + x.v * y.d2};
}

inline Jet2 operator*(Complex c, const Jet2& x) { return {c * x.v, c * x.d1, c * x.d2}; }
inline Jet2 operator*(const Jet2& x, Complex c) { return c * x; }

// Quotient rule, solved for the derivatives of x/y so that
// (x/y)*y reproduces x exactly to order 2.
inline Jet2 operator/(const Jet2& x, const Jet2& y) {
  if (std::abs(y.v) < kPoleEpsilon)
    throw std::domain_error("Jet2 division: denominator vanishes at the evaluation point");
  const Complex v = x.v / y.v;
  const Complex d1 = (x.d1 - v * y.d1) / y.v;
  const Complex d2 = (x.d2 - 2.0 * d1 * y.d1 - v * y.d2) / y.v;
  return {v, d1, d2};
}

/// Parameter a of the disk automorphism T_a(z) = (z + a) / (1 + conj(a) z).
/// |a| < 1 gives an automorphism of the disk; |a| = 1 is accepted because the
/// same formula then degenerates to the constant a, which the extremal
/// synthesis uses for unimodular factors.
struct MoebiusParam {
  explicit MoebiusParam(Complex value) : a(value) {
    if (!is_finite(value) || std::abs(value) > 1.0 + 1e-12)
      throw std::invalid_argument("MoebiusParam: |a| must not exceed 1");
  }
  Complex a;
};

inline Complex moebius_eval(const MoebiusParam& t, Complex z) {
  const Complex den = 1.0 + std::conj(t.a) * z;
  if (std::abs(den) < kPoleEpsilon)
    throw std::domain_error("moebius_eval: evaluation at the pole of T_a");
  return (z + t.a) / den;
}

/// Jet of T_a composed with the map whose jet is z; the chain rule is implied
/// by running the quotient rule on jets expressed in the outer variable.
inline Jet2 moebius_jet(const MoebiusParam& t, const Jet2& z) {
  const Jet2 num = z + t.a;
  const Jet2 den = std::conj(t.a) * z + Complex{1.0, 0.0};
  return num / den;
}

}  // namespace vregion
