// Normalized eigenfunctions.
//
//   psi(x) = A sin(k x)                      0 <= x <= a
//   psi(x) = psi(a) exp(-k~ (x - a))          x > a
//
// with A > 0 fixed by
//   A^-2 = I1 + I2,  I1 = a (2z - sin 2z) / (4z),  I2 = a sin^2 z / (2 z~).
// The outside region is stored through psi(a) rather than the coefficient
// of exp(-k~ x), which overflows for deep wells; see outside_b().

#pragma once

#include "semiwell/dimensionless.hpp"

namespace semiwell {

struct WavefunctionSpec {
  double a = 1.0;
  double z = 0.0;
  double z_tilde = 0.0;
  double k = 0.0;        // z / a
  double k_tilde = 0.0;  // z~ / a
  double amplitude = 0.0;      // A
  double outside_coeff = 0.0;  // psi(a) = A sin z

  /// Coefficient B of exp(-k~ x) outside the well.  May overflow.
  double outside_b() const;
};

/// Integral of sin^2(k x) over [0, a].
double inside_integral(double z, double a);
/// Integral of (sin z exp(-k~ (x - a)))^2 over [a, inf).
double outside_integral(double z, double z_tilde, double a);

/// Throws DomainError when z~ <= 0, a <= 0, or the state does not sit on the
/// circle of z0 (relative mismatch above 1e-6).
WavefunctionSpec build_wavefunction(const BoundState& state, WellStrength z0,
                                    double a = 1.0);

/// psi(x).  Throws DomainError for x < 0.
double evaluate(const WavefunctionSpec& spec, double x);

/// A^2 I1.
double probability_inside(const WavefunctionSpec& spec);

/// A^2 I2.
double probability_outside(const WavefunctionSpec& spec);

/// Adaptive Gauss-Kronrod quadrature of psi^2 on [0, a] plus the analytic
/// tail psi(a)^2 / (2 k~).  Independent of the closed-form normalization.
double quadrature_norm_check(const WavefunctionSpec& spec);

/// Quadrature of psi^2 over [0, a] alone.
double quadrature_inside(const WavefunctionSpec& spec);

}  // namespace semiwell
