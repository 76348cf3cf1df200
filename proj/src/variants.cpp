#include "semiwell/variants.hpp"

#include <algorithm>
#include <cmath>

namespace semiwell {

namespace {

double scan_step(VariantKind kind) {
  switch (kind) {
    case VariantKind::kSin:
    case VariantKind::kNegSin:
      return kPi;
    case VariantKind::kAbsSin:
    case VariantKind::kCorrect:
      return kPi / 2.0;
  }
  return kPi;
}

// g on one scan interval, continuous on the closed interval.  For kCorrect
// the sign of cos z is frozen to its interior value, which extends each
// branch continuously onto its endpoints.
struct Branch {
  VariantKind kind;
  double cos_sign;

  double g(double z) const {
    if (kind == VariantKind::kCorrect) return -std::sin(z) * cos_sign;
    return variant_rhs(kind, z);
  }

  // lim_{z->0+} g(z) / z
  double slope_at_origin() const {
    switch (kind) {
      case VariantKind::kSin:
      case VariantKind::kAbsSin:
        return 1.0;
      case VariantKind::kNegSin:
      case VariantKind::kCorrect:
        return -1.0;
    }
    return 0.0;
  }

  // variant_residual / z; same roots for z > 0 and no trivial root at 0.
  double scaled(double z, double z0) const {
    if (z == 0.0) return 1.0 - z0 * slope_at_origin();
    return 1.0 - z0 * g(z) / z;
  }
};

double bisect(const Branch& br, double z0, double lo, double hi, double flo) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = br.scaled(mid, z0);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(VariantKind kind) {
  switch (kind) {
    case VariantKind::kSin:
      return "sin";
    case VariantKind::kAbsSin:
      return "abs-sin";
    case VariantKind::kNegSin:
      return "neg-sin";
    case VariantKind::kCorrect:
      return "correct";
  }
  return "unknown";
}

VariantKind parse_variant_kind(std::string_view name) {
  for (auto k : {VariantKind::kSin, VariantKind::kAbsSin, VariantKind::kNegSin,
                 VariantKind::kCorrect}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown variant kind '" + std::string(name) + "'");
}

double variant_rhs(VariantKind kind, double z) {
  switch (kind) {
    case VariantKind::kSin:
      return std::sin(z);
    case VariantKind::kAbsSin:
      return std::abs(std::sin(z));
    case VariantKind::kNegSin:
      return -std::sin(z);
    case VariantKind::kCorrect: {
      const double c = std::cos(z);
      if (c == 0.0) throw DomainError("correct variant: cos(z) vanishes");
      return -std::sin(z) * c / std::abs(c);
    }
  }
  return 0.0;
}

double variant_residual(VariantKind kind, double z, WellStrength z0) {
  if (!(z > 0.0)) throw DomainError("variant_residual: z must be positive");
  return z - z0.value() * variant_rhs(kind, z);
}

std::vector<int> VariantReport::spurious_positions() const {
  std::vector<int> out;
  for (const auto& i : intersections) {
    if (i.spurious) out.push_back(i.index);
  }
  return out;
}

std::vector<double> VariantReport::valid_roots() const {
  std::vector<double> out;
  for (const auto& i : intersections) {
    if (!i.spurious) out.push_back(i.z);
  }
  return out;
}

VariantReport enumerate_intersections(VariantKind kind, WellStrength strength) {
  const double z0 = strength.value();
  const double step = scan_step(kind);
  const bool exclude_endpoints = kind == VariantKind::kCorrect;

  std::vector<double> roots;
  for (int k = 0; k * step < z0; ++k) {
    const double left = k * step;
    const double right = std::min((k + 1) * step, z0);
    const Branch br{kind, std::cos(left + 0.5 * step) < 0.0 ? -1.0 : 1.0};

    double prev_z = left;
    double prev_f = br.scaled(left, z0);
    for (int j = 1; j <= kScanProbes; ++j) {
      const double z =
          (j == kScanProbes) ? right : left + (right - left) * j / kScanProbes;
      const double f = br.scaled(z, z0);
      if (f == 0.0) {
        if (!(exclude_endpoints && j == kScanProbes)) roots.push_back(z);
      } else if (prev_f != 0.0 && (f < 0.0) != (prev_f < 0.0)) {
        roots.push_back(bisect(br, z0, prev_z, z, prev_f));
      }
      prev_z = z;
      prev_f = f;
    }
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());

  VariantReport report;
  report.kind = kind;
  int index = 0;
  for (double z : roots) {
    const bool spurious = std::sin(z) * std::cos(z) > 0.0;
    report.intersections.push_back({++index, z, spurious});
    if (spurious) ++report.n_spurious;
  }
  report.n_total = static_cast<int>(report.intersections.size());
  return report;
}

bool filtered_equivalence(VariantKind kind, WellStrength z0,
                          const SolveConfig& cfg) {
  const auto valid = enumerate_intersections(kind, z0).valid_roots();
  const auto genuine = solve_all(z0, cfg);
  if (valid.size() != genuine.size()) return false;
  const double tol = std::max(kRootMatchTol, cfg.root_tol);
  for (std::size_t i = 0; i < valid.size(); ++i) {
    if (std::abs(valid[i] - genuine[i].z) > tol) return false;
  }
  return true;
}

}  // namespace semiwell
