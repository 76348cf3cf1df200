// Closed-form bound states with E = V0 / 2.
//
// For z = (8n+3) pi/4 one has sin z = sqrt(2)/2 and cos z < 0, so the root
// condition holds with z0 = sqrt(2) z and z~ = z.  Each member pairs ONE
// energy with ONE specific depth V0 = (8n+3)^2 pi^2 hbar^2 / (16 m a^2); the
// records are not a spectrum of a single well.
//
// All quantities are in natural units hbar = m = a = 1 unless noted.

#pragma once

#include "semiwell/spectrum.hpp"

namespace semiwell {

struct ExactSolutionRecord {
  int n = 0;
  double z = 0.0;               // (8n+3) pi / 4
  double z0 = 0.0;              // sqrt(2) z
  double z_tilde = 0.0;         // equals z
  double energy_over_v0 = 0.5;
  double v0_natural = 0.0;      // V0 m a^2 / hbar^2 = (8n+3)^2 pi^2 / 16
  double amplitude_sq_times_a = 0.0;  // A^2 a = 2 z / (z + 1)
  double p_inside = 0.0;        // (4z + 2) / (4z + 4)
};

/// Throws DomainError for n < 0.
ExactSolutionRecord exact_solution(int n);

/// Interval index of the family root: (8n+3)pi/4 sits in the second
/// quadrant of period n, i.e. m = 2n + 1.
int exact_solution_interval(int n);

/// True iff the numerical solver, run at the family's z0, finds a root equal
/// to (8n+3) pi/4 within max(cfg.root_tol, 4 ulp).
bool cross_validate(int n, const SolveConfig& cfg = {});

}  // namespace semiwell
