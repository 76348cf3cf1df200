#include "semiwell/exact_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace semiwell {

ExactSolutionRecord exact_solution(int n) {
  if (n < 0) throw DomainError("exact_solution: n must be nonnegative");
  const double q = 8.0 * n + 3.0;
  const double z = q * kPi / 4.0;

  ExactSolutionRecord r;
  r.n = n;
  r.z = z;
  r.z0 = std::numbers::sqrt2 * z;
  r.z_tilde = z;
  r.energy_over_v0 = 0.5;
  r.v0_natural = q * q * kPi * kPi / 16.0;
  r.amplitude_sq_times_a = 2.0 * q * kPi / (q * kPi + 4.0);
  r.p_inside = (q * kPi + 2.0) / (q * kPi + 4.0);
  return r;
}

int exact_solution_interval(int n) {
  if (n < 0) throw DomainError("exact_solution_interval: n must be nonnegative");
  return 2 * n + 1;
}

bool cross_validate(int n, const SolveConfig& cfg) {
  const auto rec = exact_solution(n);
  const auto states = solve_all(WellStrength(rec.z0), cfg);
  const double ulp =
      std::nextafter(rec.z, std::numeric_limits<double>::infinity()) - rec.z;
  const double tol = std::max(cfg.root_tol, 4.0 * ulp);
  return std::any_of(states.begin(), states.end(), [&](const BoundState& s) {
    return std::abs(s.z - rec.z) <= tol;
  });
}

}  // namespace semiwell
