// Dimensionless formulation of the semi-infinite square well.
//
// With z = k a, z~ = k~ a and z0 = sqrt(2 m V0 a^2) / hbar the bound-state
// condition reduces to the intersection of the circle z^2 + z~^2 = z0^2 with
// the curve z~ = -z cot z.  Every solver in this library works on these
// dimensionless quantities; physical units live in physical_units.hpp.

#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace semiwell {

inline constexpr double kPi = std::numbers::pi;

/// Raised when an argument lies outside the domain of a formula.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The well-strength parameter z0.  Always finite and strictly positive.
class WellStrength {
 public:
  explicit WellStrength(double z0);

  double value() const noexcept { return z0_; }

 private:
  double z0_;
};

/// One bound state of a given well.
///
/// `m` is the 1-based interval index: the root lies in ((2m-1)pi/2, m pi).
struct BoundState {
  int m = 0;
  double z = 0.0;
  double z_tilde = 0.0;
  double energy_ratio = 0.0;  // E / V0 = (z / z0)^2
};

/// cos(z)/sin(z).  Throws DomainError when |sin z| < 1e-300.
double cot(double z);

/// sqrt(z0^2 - z^2) + z cot z, zero exactly at a bound state.
/// Requires 0 < z < z0 and z away from multiples of pi.
double residual_exact(double z, WellStrength z0);

/// d/dz of residual_exact; same domain.
double residual_exact_derivative(double z, WellStrength z0);

/// f(z) = z + (-1)^m z0 sin z, the pole-free residual for the m-th interval.
double residual_interval(double z, int m, WellStrength z0);

/// f'(z) = 1 + (-1)^m z0 cos z.
double residual_interval_derivative(double z, int m, WellStrength z0);

/// E / V0 = (z / z0)^2 for 0 < z < z0.
double energy_ratio(double z, WellStrength z0);

/// Index m of the half-open interval ((2m-1)pi/2, m pi] containing z, or
/// nullopt when z lies in a quadrant where cot z > 0 (or z <= pi/2).
std::optional<int> interval_index(double z);

}  // namespace semiwell
