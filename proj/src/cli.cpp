#include "semiwell/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "semiwell/exact_family.hpp"
#include "semiwell/physical_units.hpp"
#include "semiwell/spectrum.hpp"
#include "semiwell/wavefunction.hpp"

namespace semiwell::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Serialization

void write_json(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write_json(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        write_json(os, v, indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float:
      if (!std::isfinite(j.get<double>())) {
        os << "null";
      } else {
        os << format_number(j.get<double>());
      }
      return;
    default:
      os << j.dump();
      return;
  }
}

std::string csv_cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::number_float:
      return format_number(v.get<double>());
    case Json::value_t::string: {
      const auto s = v.get<std::string>();
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string quoted = "\"";
      for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
      }
      return quoted + "\"";
    }
    default:
      return v.dump();
  }
}

// ---------------------------------------------------------------------------
// Command plumbing

struct CommonOptions {
  double z0 = 0.0;
  double mass = 0.0;
  double width = 0.0;
  double depth = 0.0;
  std::string units = "si";
  double tol = SolveConfig{}.root_tol;
  int max_iter = SolveConfig{}.max_newton_iters;
  std::string format = "json";
  std::string output;
  int samples = 1000;
  int n = 0;
  std::string kind;
  int state = 0;

  CLI::Option* z0_opt = nullptr;
  CLI::Option* mass_opt = nullptr;
  CLI::Option* width_opt = nullptr;
  CLI::Option* depth_opt = nullptr;
};

struct ResolvedWell {
  WellStrength z0;
  std::optional<PhysicalWell> physical;
  double energy_unit = 1.0;  // joules per reported energy unit
  double length_unit = 1.0;  // metres per reported length unit
};

ResolvedWell resolve_well(const CommonOptions& o) {
  const bool has_z0 = o.z0_opt->count() > 0;
  const int physical_count = static_cast<int>(o.mass_opt->count() > 0) +
                             static_cast<int>(o.width_opt->count() > 0) +
                             static_cast<int>(o.depth_opt->count() > 0);
  if (has_z0 && physical_count > 0) {
    throw UsageError("--z0 cannot be combined with --mass/--width/--depth");
  }
  if (has_z0) return ResolvedWell{WellStrength(o.z0), std::nullopt};
  if (physical_count != 3) {
    throw UsageError("give either --z0 or all of --mass, --width, --depth");
  }

  PhysicalWell w;
  ResolvedWell out{WellStrength(1.0), std::nullopt};
  if (o.units == "si") {
    w.mass = o.mass;
    w.width_a = o.width;
    w.depth_v0 = o.depth;
  } else {
    w.mass = o.mass * si::kElectronMass;
    w.width_a = o.width * si::kNanometre;
    w.depth_v0 = o.depth * si::kElectronVolt;
    out.energy_unit = si::kElectronVolt;
    out.length_unit = si::kNanometre;
  }
  out.z0 = strength_from_physical(w);
  out.physical = w;
  return out;
}

Json echo_well(const CommonOptions& o, const ResolvedWell& well) {
  Json in = Json::object();
  in["z0"] = well.z0.value();
  if (well.physical) {
    in["mass"] = o.mass;
    in["width"] = o.width;
    in["depth"] = o.depth;
    in["units"] = o.units;
  }
  return in;
}

SolveConfig solve_config(const CommonOptions& o) {
  SolveConfig cfg;
  cfg.root_tol = o.tol;
  cfg.max_newton_iters = o.max_iter;
  cfg.validate();
  return cfg;
}

Json row_object(const CsvTable& t, const std::vector<Json>& row) {
  Json obj = Json::object();
  for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = row[i];
  return obj;
}

Json table_objects(const CsvTable& t) {
  Json arr = Json::array();
  for (const auto& row : t.rows) arr.push_back(row_object(t, row));
  return arr;
}

// ---------------------------------------------------------------------------
// Commands

OutputDocument cmd_count(const CommonOptions& o) {
  const auto well = resolve_well(o);
  OutputDocument doc;
  doc.command = "count";
  doc.inputs = echo_well(o, well);
  const int n = count_bound_states(well.z0);
  doc.results["count"] = n;
  doc.diagnostics["two_z0_over_pi"] = 2.0 * well.z0.value() / kPi;
  if (well.physical) {
    const auto& w = *well.physical;
    doc.diagnostics["critical_depth"] =
        critical_depth(w.mass, w.width_a, w.hbar) / well.energy_unit;
  }
  doc.table.header = {"count"};
  doc.table.rows.push_back({Json(n)});
  return doc;
}

OutputDocument cmd_solve(const CommonOptions& o) {
  const auto well = resolve_well(o);
  const auto cfg = solve_config(o);
  OutputDocument doc;
  doc.command = "solve";
  doc.inputs = echo_well(o, well);
  doc.inputs["tol"] = cfg.root_tol;
  doc.inputs["max_iter"] = cfg.max_newton_iters;

  const auto states = solve_all_traced(well.z0, cfg);
  doc.table.header = {"m", "z", "z_tilde", "energy_ratio", "residual",
                      "newton_iters"};
  if (well.physical) doc.table.header.push_back("energy");

  int total_iters = 0;
  int bisections = 0;
  double max_residual = 0.0;
  for (const auto& s : states) {
    const double residual = residual_exact(s.state.z, well.z0);
    std::vector<Json> row = {s.state.m,     s.state.z,    s.state.z_tilde,
                             s.state.energy_ratio, residual,
                             s.trace.iterations()};
    if (well.physical) {
      row.emplace_back(energy_from_z(s.state.z, *well.physical) / well.energy_unit);
    }
    doc.table.rows.push_back(std::move(row));
    total_iters += s.trace.iterations();
    bisections += s.trace.fallback_bisections;
    max_residual = std::max(max_residual, std::abs(residual));
  }

  doc.results["count"] = static_cast<int>(states.size());
  doc.results["roots"] = table_objects(doc.table);
  doc.diagnostics["total_newton_iters"] = total_iters;
  doc.diagnostics["fallback_bisections"] = bisections;
  doc.diagnostics["max_abs_residual"] = max_residual;
  return doc;
}

OutputDocument cmd_exact(const CommonOptions& o) {
  const auto cfg = solve_config(o);
  const auto rec = exact_solution(o.n);
  OutputDocument doc;
  doc.command = "exact";
  doc.inputs["n"] = o.n;
  doc.table.header = {"n",          "z",          "z0",
                      "z_tilde",    "energy_over_v0", "v0_natural",
                      "amplitude_sq_times_a", "p_inside"};
  doc.table.rows.push_back({rec.n, rec.z, rec.z0, rec.z_tilde,
                            rec.energy_over_v0, rec.v0_natural,
                            rec.amplitude_sq_times_a, rec.p_inside});
  doc.results = row_object(doc.table, doc.table.rows.front());
  doc.results["interval_index"] = exact_solution_interval(o.n);
  doc.diagnostics["cross_validated"] = cross_validate(o.n, cfg);
  return doc;
}

OutputDocument cmd_variants(const CommonOptions& o) {
  const auto well = resolve_well(o);
  const auto cfg = solve_config(o);
  const auto kind = parse_variant_kind(o.kind);
  const auto report = enumerate_intersections(kind, well.z0);

  OutputDocument doc;
  doc.command = "variants";
  doc.inputs = echo_well(o, well);
  doc.inputs["kind"] = std::string(to_string(kind));
  doc.table.header = {"index", "z", "spurious"};
  for (const auto& i : report.intersections) {
    doc.table.rows.push_back({i.index, i.z, i.spurious});
  }
  doc.results["kind"] = std::string(to_string(kind));
  doc.results["n_total"] = report.n_total;
  doc.results["n_spurious"] = report.n_spurious;
  doc.results["spurious_positions"] = report.spurious_positions();
  doc.results["intersections"] = table_objects(doc.table);
  doc.results["filtered_equivalent"] = filtered_equivalence(kind, well.z0, cfg);
  doc.diagnostics["scan_probes_per_interval"] = kScanProbes;
  doc.diagnostics["genuine_count"] = count_bound_states(well.z0);
  return doc;
}

OutputDocument cmd_curves(const CommonOptions& o) {
  const auto well = resolve_well(o);
  const auto kind = parse_curve_kind(o.kind.empty() ? "circle" : o.kind);
  if (o.samples < 2) throw UsageError("--samples must be at least 2");

  OutputDocument doc;
  doc.command = "curves";
  doc.inputs = echo_well(o, well);
  doc.inputs["kind"] = std::string(to_string(kind));
  doc.inputs["samples"] = o.samples;
  doc.table = emit_curves(well.z0, kind, o.samples);
  doc.results["kind"] = std::string(to_string(kind));
  doc.results["points"] = table_objects(doc.table);
  doc.diagnostics["dropped"] = o.samples - static_cast<int>(doc.table.rows.size());
  return doc;
}

OutputDocument cmd_wavefn(const CommonOptions& o) {
  const auto well = resolve_well(o);
  const auto cfg = solve_config(o);
  if (o.samples < 2) throw UsageError("--samples must be at least 2");

  const auto solved = newton_solve(o.state, well.z0, cfg);
  const double a =
      well.physical ? well.physical->width_a / well.length_unit : 1.0;
  const auto spec = build_wavefunction(solved.state, well.z0, a);

  OutputDocument doc;
  doc.command = "wavefn";
  doc.inputs = echo_well(o, well);
  doc.inputs["state"] = o.state;
  doc.inputs["samples"] = o.samples;

  const double x_max = a + 8.0 / spec.k_tilde;
  doc.table.header = {"x", "psi"};
  for (int i = 0; i < o.samples; ++i) {
    const double x = x_max * i / (o.samples - 1);
    doc.table.rows.push_back({x, evaluate(spec, x)});
  }

  doc.results["m"] = solved.state.m;
  doc.results["z"] = solved.state.z;
  doc.results["z_tilde"] = solved.state.z_tilde;
  doc.results["a"] = a;
  doc.results["amplitude"] = spec.amplitude;
  doc.results["outside_coeff"] = spec.outside_coeff;
  doc.results["p_inside"] = probability_inside(spec);
  doc.results["x_max"] = x_max;
  doc.results["points"] = table_objects(doc.table);
  doc.diagnostics["quadrature_norm"] = quadrature_norm_check(spec);
  doc.diagnostics["newton_iters"] = solved.trace.iterations();
  return doc;
}

struct WellFlags {
  CLI::Option* z0 = nullptr;
  CLI::Option* mass = nullptr;
  CLI::Option* width = nullptr;
  CLI::Option* depth = nullptr;

  void bind(CommonOptions& o) const {
    o.z0_opt = z0;
    o.mass_opt = mass;
    o.width_opt = width;
    o.depth_opt = depth;
  }
};

WellFlags add_well_options(CLI::App& sub, CommonOptions& o) {
  WellFlags f;
  f.z0 = sub.add_option("--z0", o.z0, "dimensionless well strength");
  f.mass = sub.add_option("--mass", o.mass, "particle mass (kg, or electron masses with ev-nm)");
  f.width = sub.add_option("--width", o.width, "well width (m, or nm with ev-nm)");
  f.depth = sub.add_option("--depth", o.depth, "well depth (J, or eV with ev-nm)");
  sub.add_option("--units", o.units, "unit system for the physical triple")
      ->check(CLI::IsMember({"si", "ev-nm"}));
  return f;
}

void add_solver_options(CLI::App& sub, CommonOptions& o) {
  sub.add_option("--tol", o.tol, "Newton step tolerance");
  sub.add_option("--max-iter", o.max_iter, "Newton iteration cap");
}

void add_output_options(CLI::App& sub, CommonOptions& o) {
  sub.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  sub.add_option("--output", o.output, "write to this path instead of stdout");
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw DomainError("unsupported format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (std::isfinite(v) && s.find_first_of(".eE") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string serialize(const OutputDocument& doc, Format format) {
  std::ostringstream os;
  if (format == Format::kJson) {
    Json top = Json::object();
    top["schema_version"] = doc.schema_version;
    top["command"] = doc.command;
    top["inputs"] = doc.inputs;
    top["results"] = doc.results;
    top["diagnostics"] = doc.diagnostics;
    write_json(os, top, 0);
    os << '\n';
    return os.str();
  }

  const auto& t = doc.table;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (i) os << ',';
    os << t.header[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << csv_cell(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

OutputDocument parse_document(std::string_view json_text) {
  const auto j = Json::parse(json_text);
  OutputDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.command = j.at("command").get<std::string>();
  doc.inputs = j.at("inputs");
  doc.results = j.at("results");
  doc.diagnostics = j.at("diagnostics");
  return doc;
}

CurveKind parse_curve_kind(std::string_view name) {
  if (name == "circle") return CurveKind::kExactCircle;
  if (name == "sin") return CurveKind::kSin;
  if (name == "abs-sin") return CurveKind::kAbsSin;
  if (name == "neg-sin") return CurveKind::kNegSin;
  if (name == "correct") return CurveKind::kCorrect;
  throw DomainError("unknown curve kind '" + std::string(name) + "'");
}

std::string_view to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::kExactCircle:
      return "circle";
    case CurveKind::kSin:
      return "sin";
    case CurveKind::kAbsSin:
      return "abs-sin";
    case CurveKind::kNegSin:
      return "neg-sin";
    case CurveKind::kCorrect:
      return "correct";
  }
  return "unknown";
}

double circle_curve(double z, WellStrength z0) {
  const double r = z0.value();
  if (z < 0.0 || z > r) throw DomainError("circle_curve: z must lie in [0, z0]");
  return std::sqrt((r - z) * (r + z));
}

double minus_z_cot_z(double z) { return -z * cot(z); }

CsvTable emit_curves(WellStrength z0, CurveKind kind, int samples) {
  if (samples < 2) throw DomainError("emit_curves: need at least 2 samples");
  const double r = z0.value();
  CsvTable t;

  if (kind == CurveKind::kExactCircle) {
    t.header = {"z", "circle", "minus_z_cot_z"};
    for (int i = 1; i <= samples; ++i) {
      const double z = r * i / samples;
      if (std::abs(std::sin(z)) < 1e-6) continue;
      t.rows.push_back({z, circle_curve(z, z0), minus_z_cot_z(z)});
    }
    return t;
  }

  VariantKind vk = VariantKind::kSin;
  switch (kind) {
    case CurveKind::kAbsSin:
      vk = VariantKind::kAbsSin;
      break;
    case CurveKind::kNegSin:
      vk = VariantKind::kNegSin;
      break;
    case CurveKind::kCorrect:
      vk = VariantKind::kCorrect;
      break;
    default:
      break;
  }
  t.header = {"z", "line", "rhs"};
  for (int i = 1; i <= samples; ++i) {
    const double z = r * i / samples;
    if (vk == VariantKind::kCorrect && std::abs(std::cos(z)) < 1e-6) continue;
    t.rows.push_back({z, z / r, variant_rhs(vk, z)});
  }
  return t;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bound states of a particle in a semi-infinite square well",
               "semiwell"};
  app.require_subcommand(1);

  CommonOptions o;

  auto* count = app.add_subcommand("count", "number of bound states");
  const auto count_flags = add_well_options(*count, o);
  add_output_options(*count, o);

  auto* solve = app.add_subcommand("solve", "all bound-state roots");
  const auto solve_flags = add_well_options(*solve, o);
  add_solver_options(*solve, o);
  add_output_options(*solve, o);

  auto* exact = app.add_subcommand("exact", "closed-form E = V0/2 family member");
  exact->add_option("--n", o.n, "family index")->required()->check(CLI::NonNegativeNumber);
  add_solver_options(*exact, o);
  add_output_options(*exact, o);

  auto* wavefn = app.add_subcommand("wavefn", "sampled normalized eigenfunction");
  const auto wavefn_flags = add_well_options(*wavefn, o);
  add_solver_options(*wavefn, o);
  add_output_options(*wavefn, o);
  wavefn->add_option("--state", o.state, "1-based state index")->required();
  wavefn->add_option("--samples", o.samples, "number of x samples");

  auto* variants = app.add_subcommand("variants", "intersections of a simplified equation");
  const auto variants_flags = add_well_options(*variants, o);
  add_solver_options(*variants, o);
  add_output_options(*variants, o);
  variants->add_option("--kind", o.kind, "sin|abs-sin|neg-sin|correct")
      ->required()
      ->check(CLI::IsMember({"sin", "abs-sin", "neg-sin", "correct"}));

  auto* curves = app.add_subcommand("curves", "plot-ready curve samples");
  const auto curves_flags = add_well_options(*curves, o);
  add_output_options(*curves, o);
  curves->add_option("--kind", o.kind, "circle|sin|abs-sin|neg-sin|correct")
      ->check(CLI::IsMember({"circle", "sin", "abs-sin", "neg-sin", "correct"}));
  curves->add_option("--samples", o.samples, "number of samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  OutputDocument doc;
  try {
    if (*count) {
      count_flags.bind(o);
      doc = cmd_count(o);
    } else if (*solve) {
      solve_flags.bind(o);
      doc = cmd_solve(o);
    } else if (*exact) {
      doc = cmd_exact(o);
    } else if (*wavefn) {
      wavefn_flags.bind(o);
      doc = cmd_wavefn(o);
    } else if (*variants) {
      variants_flags.bind(o);
      doc = cmd_variants(o);
    } else {
      curves_flags.bind(o);
      doc = cmd_curves(o);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string bytes = serialize(doc, parse_format(o.format));
  if (o.output.empty()) {
    out << bytes;
    return 0;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file || !(file << bytes) || !file.flush()) {
    err << "error: cannot write " << o.output << "\n";
    return 1;
  }
  return 0;
}

}  // namespace semiwell::cli
