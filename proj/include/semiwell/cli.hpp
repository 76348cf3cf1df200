// Command-line front end and its output documents.
//
// Every command produces an OutputDocument:
//   {schema_version: "1", command, inputs, results, diagnostics}
// serialized as JSON (floats with 17 significant digits) or as a CSV table
// (header row, comma separated, LF line endings).  Exit codes: 0 success,
// 1 domain or I/O error, 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "semiwell/dimensionless.hpp"
#include "semiwell/variants.hpp"

namespace semiwell::cli {

using Json = nlohmann::ordered_json;

enum class Format { kJson, kCsv };

/// "json" or "csv"; throws DomainError otherwise.
Format parse_format(std::string_view name);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
};

struct OutputDocument {
  std::string schema_version = "1";
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json diagnostics = Json::object();
  CsvTable table;  // tabular view of `results` used for CSV output
};

/// Shortest form of %.17g that still reads as a float ("15.0", not "15").
std::string format_number(double v);

std::string serialize(const OutputDocument& doc, Format format);

/// Inverse of the JSON serialization.  The CSV table is not reconstructed.
OutputDocument parse_document(std::string_view json_text);

enum class CurveKind { kExactCircle, kSin, kAbsSin, kNegSin, kCorrect };

CurveKind parse_curve_kind(std::string_view name);
std::string_view to_string(CurveKind kind);

/// Upper quarter of the circle z^2 + z~^2 = z0^2.
double circle_curve(double z, WellStrength z0);
/// z~ = -z cot z.
double minus_z_cot_z(double z);

/// Uniform samples z_i = z0 i / samples, i = 1..samples.
///   kExactCircle: columns z, circle, minus_z_cot_z; points with
///                 |sin z| < 1e-6 dropped.
///   variants:     columns z, line (z / z0), rhs (g(z)); for kCorrect
///                 points with |cos z| < 1e-6 dropped.
CsvTable emit_curves(WellStrength z0, CurveKind kind, int samples);

/// Parses `args` (without the program name), runs the command, and writes
/// the document to `out` or to --output.  Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace semiwell::cli
