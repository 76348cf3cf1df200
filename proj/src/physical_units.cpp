#include "semiwell/physical_units.hpp"

#include <cmath>

namespace semiwell {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void PhysicalWell::validate() const {
  if (!positive_finite(mass) || !positive_finite(width_a) ||
      !positive_finite(depth_v0) || !positive_finite(hbar)) {
    throw DomainError("physical well: mass, width, depth and hbar must be positive");
  }
}

WellStrength strength_from_physical(const PhysicalWell& w) {
  w.validate();
  // Split the product so that SI magnitudes (1e-31 kg, 1e-19 J, 1e-34 J s)
  // never underflow in an intermediate.
  const double z0 = std::sqrt(2.0 * w.mass) * std::sqrt(w.depth_v0) *
                    (w.width_a / w.hbar);
  if (!std::isfinite(z0) || z0 > 1e300) {
    throw DomainError("strength_from_physical: z0 overflows");
  }
  return WellStrength(z0);
}

double energy_from_z(double z, const PhysicalWell& w) {
  const double z0 = strength_from_physical(w).value();
  if (!(z > 0.0) || !(z < z0)) {
    throw DomainError("energy_from_z: z must lie in (0, z0)");
  }
  const double q = w.hbar * z / w.width_a;
  return q * q / (2.0 * w.mass);
}

double critical_depth(double mass, double width_a, double hbar) {
  if (!positive_finite(mass) || !positive_finite(width_a) || !positive_finite(hbar)) {
    throw DomainError("critical_depth: arguments must be positive");
  }
  const double q = kPi * hbar / width_a;
  return q * q / (8.0 * mass);
}

}  // namespace semiwell
