// Candidate simplifications of the bound-state equation.
//
// Squaring z~ = -z cot z against the circle gives z^2 = z0^2 sin^2 z, and
// each way of taking the square root yields a different one-line equation
// z = z0 g(z).  Only the sign-aware form g(z) = -sin z cos z / |cos z| keeps
// exactly the genuine roots; the other three either add roots with
// cot z > 0 or lose genuine ones.  This module enumerates the intersections
// of each form and labels the spurious ones.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semiwell/dimensionless.hpp"
#include "semiwell/spectrum.hpp"

namespace semiwell {

enum class VariantKind {
  kSin,     // z = z0 sin z
  kAbsSin,  // z = z0 |sin z|
  kNegSin,  // z = -z0 sin z
  kCorrect, // z = -z0 sin z cos z / |cos z|
};

std::string_view to_string(VariantKind kind);

/// Parses "sin", "abs-sin", "neg-sin" or "correct".  Throws DomainError.
VariantKind parse_variant_kind(std::string_view name);

/// The right-hand side g(z).  For kCorrect throws DomainError where
/// cos z == 0.
double variant_rhs(VariantKind kind, double z);

/// z - z0 g(z).  Requires z > 0.
double variant_residual(VariantKind kind, double z, WellStrength z0);

struct Intersection {
  int index = 0;  // 1-based, increasing z
  double z = 0.0;
  bool spurious = false;  // cot z > 0
};

struct VariantReport {
  VariantKind kind = VariantKind::kCorrect;
  std::vector<Intersection> intersections;
  int n_total = 0;
  int n_spurious = 0;

  std::vector<int> spurious_positions() const;
  std::vector<double> valid_roots() const;
};

/// Probe points per scan interval ahead of bisection.
inline constexpr int kScanProbes = 64;

/// All roots of variant_residual in (0, z0], found by sign-change scanning
/// between consecutive zeros of g and refined by bisection.  A tangency
/// without a sign change is not reported; roots are counted as detected
/// sign changes.  For kCorrect the discontinuities at odd multiples of pi/2
/// are never reported as roots.
VariantReport enumerate_intersections(VariantKind kind, WellStrength z0);

/// Tolerance used when matching variant roots against the solver.
inline constexpr double kRootMatchTol = 1e-9;

/// True iff the non-spurious roots of `kind` coincide with solve_all(z0).
bool filtered_equivalence(VariantKind kind, WellStrength z0,
                          const SolveConfig& cfg = {});

}  // namespace semiwell
