#include "semiwell/wavefunction.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace semiwell {

namespace {

constexpr unsigned kQuadratureMaxDepth = 20;
// Relative; the integrands here are O(1) so this sits well below 1e-10
// absolute.
constexpr double kQuadratureRelTol = 1e-12;

}  // namespace

double WavefunctionSpec::outside_b() const {
  return outside_coeff * std::exp(k_tilde * a);
}

double inside_integral(double z, double a) {
  return a * (2.0 * z - std::sin(2.0 * z)) / (4.0 * z);
}

double outside_integral(double z, double z_tilde, double a) {
  const double s = std::sin(z);
  return a * s * s / (2.0 * z_tilde);
}

WavefunctionSpec build_wavefunction(const BoundState& state, WellStrength z0,
                                    double a) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw DomainError("build_wavefunction: width must be positive");
  }
  if (!(state.z_tilde > 0.0)) {
    throw DomainError("build_wavefunction: z_tilde <= 0 is not normalizable");
  }
  if (!(state.z > 0.0)) {
    throw DomainError("build_wavefunction: z must be positive");
  }
  const double r2 = z0.value() * z0.value();
  const double mismatch =
      std::abs(state.z * state.z + state.z_tilde * state.z_tilde - r2);
  if (mismatch > 1e-6 * r2) {
    throw DomainError("build_wavefunction: state does not lie on the circle of z0");
  }

  WavefunctionSpec spec;
  spec.a = a;
  spec.z = state.z;
  spec.z_tilde = state.z_tilde;
  spec.k = state.z / a;
  spec.k_tilde = state.z_tilde / a;
  const double norm = inside_integral(state.z, a) +
                      outside_integral(state.z, state.z_tilde, a);
  spec.amplitude = 1.0 / std::sqrt(norm);
  spec.outside_coeff = spec.amplitude * std::sin(state.z);
  return spec;
}

double evaluate(const WavefunctionSpec& spec, double x) {
  if (x < 0.0) throw DomainError("evaluate: x must be nonnegative");
  if (x <= spec.a) return spec.amplitude * std::sin(spec.k * x);
  return spec.outside_coeff * std::exp(-spec.k_tilde * (x - spec.a));
}

double probability_inside(const WavefunctionSpec& spec) {
  return spec.amplitude * spec.amplitude * inside_integral(spec.z, spec.a);
}

double probability_outside(const WavefunctionSpec& spec) {
  return spec.amplitude * spec.amplitude *
         outside_integral(spec.z, spec.z_tilde, spec.a);
}

double quadrature_inside(const WavefunctionSpec& spec) {
  using boost::math::quadrature::gauss_kronrod;
  auto density = [&spec](double x) {
    const double psi = spec.amplitude * std::sin(spec.k * x);
    return psi * psi;
  };
  return gauss_kronrod<double, 31>::integrate(density, 0.0, spec.a,
                                              kQuadratureMaxDepth,
                                              kQuadratureRelTol);
}

double quadrature_norm_check(const WavefunctionSpec& spec) {
  const double tail =
      spec.outside_coeff * spec.outside_coeff / (2.0 * spec.k_tilde);
  return quadrature_inside(spec) + tail;
}

}  // namespace semiwell
