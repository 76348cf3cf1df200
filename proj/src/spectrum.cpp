#include "semiwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semiwell {

namespace {

constexpr double kMinDerivative = 1e-14;

// Never demand more than the residual can resolve: a few roundings of the
// summed terms plus the change caused by a one-ulp move in z.
double interval_residual_tolerance(double z, int m, WellStrength z0,
                                   const SolveConfig& cfg) {
  const double ulp =
      std::nextafter(std::abs(z), std::numeric_limits<double>::infinity()) -
      std::abs(z);
  const double slope = std::abs(residual_interval_derivative(z, m, z0));
  const double floor =
      8.0 * std::numeric_limits<double>::epsilon() * (std::abs(z) + z0.value()) +
      2.0 * slope * ulp;
  return std::max(cfg.residual_tol, floor);
}

}  // namespace

void SolveConfig::validate() const {
  if (!(root_tol > 0.0) || !(residual_tol > 0.0) || max_newton_iters < 1) {
    throw DomainError("solve config: tolerances and iteration cap must be positive");
  }
}

int count_bound_states(WellStrength z0) {
  const double ratio = 2.0 * z0.value() / kPi;
  if (ratio <= 1.0) return 0;

  const double nearest_odd = 2.0 * std::round((ratio - 1.0) / 2.0) + 1.0;
  if (std::abs(ratio - nearest_odd) <= kDegenerateRelTol * ratio) {
    return static_cast<int>((nearest_odd - 1.0) / 2.0);
  }
  return static_cast<int>(std::floor((ratio + 1.0) / 2.0));
}

std::pair<double, double> bracket_for(int m, WellStrength z0) {
  const int n = count_bound_states(z0);
  if (m < 1 || m > n) {
    throw DomainError("bracket_for: state index " + std::to_string(m) +
                      " outside 1.." + std::to_string(n));
  }
  return {(2 * m - 1) * kPi / 2.0, m * kPi};
}

SolvedState newton_solve(int m, WellStrength z0, const SolveConfig& cfg) {
  cfg.validate();
  auto [lo, hi] = bracket_for(m, z0);
  const double r = z0.value();

  SolvedState out;
  NewtonTrace& trace = out.trace;
  double z = (4 * m - 1) * kPi / 4.0;
  trace.iterates.push_back(z);

  for (int iter = 0; iter < cfg.max_newton_iters; ++iter) {
    const double f = residual_interval(z, m, z0);
    if (f == 0.0) {
      trace.converged = true;
      break;
    }
    if (f < 0.0) {
      lo = std::max(lo, z);
    } else {
      hi = std::min(hi, z);
    }

    const double fp = residual_interval_derivative(z, m, z0);
    double next = std::numeric_limits<double>::quiet_NaN();
    if (std::abs(fp) >= kMinDerivative) next = z - f / fp;
    // z itself is now a bracket end, so a converged step may land on it.
    if (!(next >= lo && next <= hi)) {
      next = 0.5 * (lo + hi);
      ++trace.fallback_bisections;
    }
    trace.iterates.push_back(next);

    const bool small_step = std::abs(next - z) < cfg.root_tol;
    z = next;
    if (small_step && std::abs(residual_interval(z, m, z0)) <=
                          interval_residual_tolerance(z, m, z0, cfg)) {
      trace.converged = true;
      break;
    }
  }

  if (!trace.converged) {
    throw ConvergenceError("newton_solve: no convergence for m = " +
                           std::to_string(m) + " after " +
                           std::to_string(cfg.max_newton_iters) + " iterations");
  }

  if (!(z < r)) {
    throw DomainError("newton_solve: root for m = " + std::to_string(m) +
                      " is indistinguishable from the threshold z = z0");
  }
  const double q = z / r;
  // On the root z = z0 |sin z|, hence z~ = z0 |cos z|.  This stays accurate
  // near threshold where sqrt(z0^2 - z^2) loses all digits.
  out.state = BoundState{m, z, r * std::abs(std::cos(z)), q * q};
  return out;
}

double exact_residual_tolerance(double z, WellStrength z0,
                                const SolveConfig& cfg) {
  const double ulp = std::nextafter(z, std::numeric_limits<double>::infinity()) - z;
  const double slope = std::abs(residual_exact_derivative(z, z0));
  return cfg.residual_tol * std::max(1.0, z0.value()) + 4.0 * ulp * slope;
}

std::vector<SolvedState> solve_all_traced(WellStrength z0,
                                          const SolveConfig& cfg) {
  const int n = count_bound_states(z0);
  std::vector<SolvedState> states;
  states.reserve(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    SolvedState s = newton_solve(m, z0, cfg);
    const double z = s.state.z;
    if (!(cot(z) < 0.0)) {
      throw ConvergenceError("solve_all: root " + std::to_string(m) +
                             " has cot(z) >= 0");
    }
    if (std::abs(residual_exact(z, z0)) > exact_residual_tolerance(z, z0, cfg)) {
      throw ConvergenceError("solve_all: root " + std::to_string(m) +
                             " fails the transcendental equation check");
    }
    states.push_back(std::move(s));
  }
  return states;
}

std::vector<BoundState> solve_all(WellStrength z0, const SolveConfig& cfg) {
  std::vector<BoundState> out;
  for (auto& s : solve_all_traced(z0, cfg)) out.push_back(s.state);
  return out;
}

}  // namespace semiwell
