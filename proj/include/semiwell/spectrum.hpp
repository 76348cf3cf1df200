// Bound-state counting and the bracketed Newton solver.
//
// In the m-th interval ((2m-1)pi/2, m pi) the signs of sin z and cos z are
// fixed, so the bound-state condition collapses to the smooth function
// f(z) = z + (-1)^m z0 sin z.  f is negative at the left end whenever the
// interval starts below z0 and equals m pi at the right end, giving exactly
// one root per admissible interval.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "semiwell/dimensionless.hpp"

namespace semiwell {

struct SolveConfig {
  double root_tol = 1e-12;      // step-size convergence threshold
  double residual_tol = 1e-9;   // residual acceptance
  int max_newton_iters = 50;

  /// Throws DomainError unless every field is strictly positive.
  void validate() const;
};

struct NewtonTrace {
  std::vector<double> iterates;  // z(0), z(1), ...
  bool converged = false;
  int fallback_bisections = 0;

  int iterations() const { return static_cast<int>(iterates.size()) - 1; }
};

/// Thrown when the safeguarded iteration fails to settle.  With the
/// bisection fallback in place this indicates a bug, not bad input.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

/// Relative tolerance used to decide that 2 z0 / pi is an odd integer.
inline constexpr double kDegenerateRelTol = 1e-12;

/// Number N of bound states: 2N-1 < 2 z0/pi < 2N+1.  Zero for z0 <= pi/2.
/// When z0 is (within kDegenerateRelTol) an odd multiple m pi/2, the
/// threshold root z = z0 is discarded and N = (m-1)/2.
int count_bound_states(WellStrength z0);

/// The interval ((2m-1)pi/2, m pi) holding the m-th root.
/// Throws DomainError unless 1 <= m <= count_bound_states(z0).
std::pair<double, double> bracket_for(int m, WellStrength z0);

struct SolvedState {
  BoundState state;
  NewtonTrace trace;
};

/// Newton's method on the interval residual, started at the interval
/// midpoint (4m-1)pi/4.  Any step leaving the live bracket, or a vanishing
/// derivative, is replaced by a bisection step.
SolvedState newton_solve(int m, WellStrength z0, const SolveConfig& cfg = {});

/// All bound states in increasing order of z, each verified against the
/// original transcendental equation.
std::vector<BoundState> solve_all(WellStrength z0, const SolveConfig& cfg = {});

/// Like solve_all but keeps the Newton trace for each state.
std::vector<SolvedState> solve_all_traced(WellStrength z0,
                                          const SolveConfig& cfg = {});

/// Acceptance threshold for residual_exact at a computed root.  Scales with
/// z0 and with the conditioning of the residual at z, since a root is only
/// known to within one ulp.
double exact_residual_tolerance(double z, WellStrength z0,
                                const SolveConfig& cfg);

}  // namespace semiwell
