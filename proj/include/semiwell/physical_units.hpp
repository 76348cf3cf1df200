// Conversions between SI well parameters and the dimensionless core.

#pragma once

#include "semiwell/dimensionless.hpp"

namespace semiwell {

namespace si {
inline constexpr double kHbar = 1.054571817e-34;          // J s
inline constexpr double kElectronMass = 9.1093837015e-31; // kg
inline constexpr double kElectronVolt = 1.602176634e-19;  // J
inline constexpr double kNanometre = 1e-9;                // m
}  // namespace si

/// A particle of `mass` in a well of `width_a` and `depth_v0`.  Set hbar = 1
/// to work in natural units.
struct PhysicalWell {
  double mass = si::kElectronMass;
  double width_a = si::kNanometre;
  double depth_v0 = si::kElectronVolt;
  double hbar = si::kHbar;

  /// Throws DomainError unless all four fields are finite and positive.
  void validate() const;
};

/// z0 = sqrt(2 m V0) a / hbar.  Throws DomainError if the result is not a
/// finite number below 1e300.
WellStrength strength_from_physical(const PhysicalWell& w);

/// E = hbar^2 z^2 / (2 m a^2) for 0 < z < z0.
double energy_from_z(double z, const PhysicalWell& w);

/// pi^2 hbar^2 / (8 m a^2): no state is bound at or below this depth.
double critical_depth(double mass, double width_a, double hbar = si::kHbar);

}  // namespace semiwell
