#include "semiwell/dimensionless.hpp"

#include <cmath>

namespace semiwell {

namespace {

double sign_of_interval(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

void require_inside(double z, double z0, const char* what) {
  if (!(z > 0.0) || !(z < z0)) {
    throw DomainError(std::string(what) + ": z must lie in (0, z0)");
  }
}

}  // namespace

WellStrength::WellStrength(double z0) : z0_(z0) {
  if (!std::isfinite(z0) || !(z0 > 0.0)) {
    throw DomainError("well strength z0 must be finite and positive");
  }
}

double cot(double z) {
  const double s = std::sin(z);
  if (std::abs(s) < 1e-300) {
    throw DomainError("cot: sin(z) vanishes");
  }
  return std::cos(z) / s;
}

double residual_exact(double z, WellStrength z0) {
  const double r = z0.value();
  require_inside(z, r, "residual_exact");
  // (r - z)(r + z) keeps precision when z is close to r.
  return std::sqrt((r - z) * (r + z)) + z * cot(z);
}

double residual_exact_derivative(double z, WellStrength z0) {
  const double r = z0.value();
  require_inside(z, r, "residual_exact_derivative");
  const double s = std::sin(z);
  const double c = cot(z);
  return -z / std::sqrt((r - z) * (r + z)) + c - z / (s * s);
}

double residual_interval(double z, int m, WellStrength z0) {
  return z + sign_of_interval(m) * z0.value() * std::sin(z);
}

double residual_interval_derivative(double z, int m, WellStrength z0) {
  return 1.0 + sign_of_interval(m) * z0.value() * std::cos(z);
}

double energy_ratio(double z, WellStrength z0) {
  require_inside(z, z0.value(), "energy_ratio");
  const double q = z / z0.value();
  return q * q;
}

std::optional<int> interval_index(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) return std::nullopt;
  const int m = static_cast<int>(std::ceil(z / kPi));
  if (m < 1) return std::nullopt;
  if (z > (2 * m - 1) * kPi / 2.0) return m;
  return std::nullopt;
}

}  // namespace semiwell
