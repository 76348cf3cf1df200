#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "semiwell/cli.hpp"

namespace semiwell::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return lines;
}

TEST(Cli, SolveJsonMatchesTable) {
  const auto r = invoke({"solve", "--z0", "15", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema_version"], "1");
  EXPECT_EQ(doc["command"], "solve");
  EXPECT_DOUBLE_EQ(doc["inputs"]["z0"].get<double>(), 15.0);
  EXPECT_DOUBLE_EQ(doc["inputs"]["tol"].get<double>(), 1e-12);
  EXPECT_EQ(doc["inputs"]["max_iter"], 50);
  EXPECT_EQ(doc["results"]["count"], 5);
  const std::vector<double> expected = {2.94404, 5.88035, 8.79801, 11.67442, 14.41691};
  const auto& roots = doc["results"]["roots"];
  ASSERT_EQ(roots.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(roots[i]["m"], static_cast<int>(i + 1));
    EXPECT_NEAR(roots[i]["z"].get<double>(), expected[i], 1e-5);
    for (const char* key : {"z_tilde", "energy_ratio", "residual", "newton_iters"}) {
      EXPECT_TRUE(roots[i].contains(key)) << key;
    }
  }
  // Key order follows the schema.
  EXPECT_LT(r.out.find("\"schema_version\""), r.out.find("\"command\""));
  EXPECT_LT(r.out.find("\"inputs\""), r.out.find("\"results\""));
  EXPECT_LT(r.out.find("\"results\""), r.out.find("\"diagnostics\""));
}

TEST(Cli, SolveCsv) {
  const auto r = invoke({"solve", "--z0", "15", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto lines = split_lines(r.out);
  ASSERT_EQ(lines.size(), 6u);
  EXPECT_EQ(lines[0], "m,z,z_tilde,energy_ratio,residual,newton_iters");
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, CsvAndJsonCarrySameDigits) {
  const auto js = invoke({"solve", "--z0", "25"});
  const auto cs = invoke({"solve", "--z0", "25", "--format", "csv"});
  const auto lines = split_lines(cs.out);
  const auto doc = Json::parse(js.out);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string z_text = format_number(doc["results"]["roots"][i - 1]["z"].get<double>());
    EXPECT_NE(lines[i].find("," + z_text + ","), std::string::npos);
    EXPECT_NE(js.out.find(z_text), std::string::npos);
  }
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> args = {"variants", "--kind", "abs-sin", "--z0", "25"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, Count) {
  const auto r = invoke({"count", "--z0", "25"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["results"]["count"], 8);
  const auto empty = invoke({"count", "--z0", "1.0"});
  EXPECT_EQ(Json::parse(empty.out)["results"]["count"], 0);
}

TEST(Cli, CountFromPhysicalTriple) {
  // electron in a 1 nm, 1 eV well: z0 ~ 5.12, 2 z0/pi ~ 3.26 -> 2 states
  const auto r = invoke({"count", "--mass", "1", "--width", "1", "--depth", "1",
                         "--units", "ev-nm"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_NEAR(doc["inputs"]["z0"].get<double>(), 5.1231672228139935, 1e-12);
  EXPECT_EQ(doc["results"]["count"], 2);
}

TEST(Cli, Exact) {
  const auto r = invoke({"exact", "--n", "0"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_NEAR(doc["results"]["p_inside"].get<double>(), 0.851, 5e-4);
  EXPECT_EQ(doc["results"]["energy_over_v0"].get<double>(), 0.5);
  EXPECT_TRUE(doc["diagnostics"]["cross_validated"].get<bool>());
}

TEST(Cli, Variants) {
  const auto r = invoke({"variants", "--kind", "sin", "--z0", "25"});
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["results"]["n_total"], 7);
  EXPECT_EQ(doc["results"]["spurious_positions"], Json::parse("[2,4,6]"));
  EXPECT_FALSE(doc["results"]["filtered_equivalent"].get<bool>());
}

TEST(Cli, Wavefn) {
  const auto r = invoke({"wavefn", "--z0", "15", "--state", "1", "--samples", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  const auto& pts = doc["results"]["points"];
  ASSERT_EQ(pts.size(), 50u);
  EXPECT_EQ(pts[0]["psi"].get<double>(), 0.0);
  const double zt = doc["results"]["z_tilde"].get<double>();
  EXPECT_NEAR(pts[49]["x"].get<double>(), 1.0 + 8.0 / zt, 1e-12);
  EXPECT_NEAR(doc["diagnostics"]["quadrature_norm"].get<double>(), 1.0, 1e-8);
}

TEST(Cli, WavefnStateOutOfRangeIsDomainError) {
  const auto r = invoke({"wavefn", "--z0", "15", "--state", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, CurvesCircleCrossesAtRoots) {
  const auto r = invoke({"curves", "--z0", "15", "--samples", "3000", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  const auto lines = split_lines(r.out);
  EXPECT_EQ(lines[0], "z,circle,minus_z_cot_z");
  std::vector<double> crossings;
  double prev_z = 0, prev_d = 0;
  bool have_prev = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double z, c, m;
    ASSERT_EQ(std::sscanf(lines[i].c_str(), "%lf,%lf,%lf", &z, &c, &m), 3);
    const double d = c - m;
    // Only count crossings where -z cot z is finite and small enough to meet
    // the circle, i.e. not across a pole.
    if (have_prev && (d < 0) != (prev_d < 0) && std::abs(d) < 15 && std::abs(prev_d) < 15) {
      crossings.push_back(0.5 * (z + prev_z));
    }
    prev_z = z;
    prev_d = d;
    have_prev = true;
  }
  const std::vector<double> expected = {2.94404, 5.88035, 8.79801, 11.67442, 14.41691};
  ASSERT_EQ(crossings.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(crossings[i], expected[i], 15.0 / 3000);
  }
}

TEST(EmitCurves, HelpersAndDroppedPoles) {
  EXPECT_DOUBLE_EQ(circle_curve(0.0, WellStrength(15.0)), 15.0);
  EXPECT_NEAR(minus_z_cot_z(kPi / 2.0), 0.0, 1e-15);
  const auto t = emit_curves(WellStrength(4.0 * kPi), CurveKind::kExactCircle, 8);
  // samples at pi/2 multiples; pi, 2pi, 3pi, 4pi are dropped
  EXPECT_EQ(t.rows.size(), 4u);
  const auto c = emit_curves(WellStrength(4.0 * kPi), CurveKind::kCorrect, 8);
  EXPECT_EQ(c.rows.size(), 4u);
  EXPECT_THROW(emit_curves(WellStrength(1.0), CurveKind::kSin, 1), DomainError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"solve", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--z0"}).code, 2);
  EXPECT_EQ(invoke({"solve"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--z0", "15", "--mass", "1"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--mass", "1", "--width", "1"}).code, 2);
  EXPECT_EQ(invoke({"solve", "--z0", "15", "--format", "xml"}).code, 2);
  EXPECT_EQ(invoke({"variants", "--z0", "15", "--kind", "cos"}).code, 2);
  EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(invoke({"solve", "--z0", "-3"}).code, 1);
  EXPECT_EQ(invoke({"solve", "--z0", "15", "--tol", "0"}).code, 1);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "semiwell_cli_test.json";
  const auto r = invoke({"count", "--z0", "15", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(Json::parse(buf.str())["results"]["count"], 5);
  std::filesystem::remove(path);

  const auto bad = invoke({"count", "--z0", "15", "--output", "/nonexistent-dir/x.json"});
  EXPECT_EQ(bad.code, 1);
}

TEST(Serialize, EmptyCountDocument) {
  OutputDocument doc;
  doc.command = "count";
  doc.results["count"] = 0;
  const auto j = Json::parse(serialize(doc, Format::kJson));
  EXPECT_EQ(j["results"]["count"], 0);
  EXPECT_THROW(parse_format("yaml"), DomainError);
}

TEST(Serialize, SeventeenDigitFloats) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(15.0), "15.0");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(2.9440408044848856), "2.9440408044848856");
}

TEST(SerializeProperty, JsonRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"solve", "--z0", "40"},
           {"exact", "--n", "7"},
           {"variants", "--kind", "correct", "--z0", "12.5"},
           {"curves", "--z0", "9", "--samples", "40", "--kind", "abs-sin"},
           {"wavefn", "--z0", "25", "--state", "8", "--samples", "30"}}) {
    const auto r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = parse_document(r.out);
    // Reserializing the parsed document reproduces the bytes exactly.
    EXPECT_EQ(serialize(doc, Format::kJson), r.out) << args[0];
    const auto again = parse_document(serialize(doc, Format::kJson));
    EXPECT_EQ(again.results, doc.results);
    EXPECT_EQ(again.inputs, doc.inputs);
  }
}

}  // namespace
}  // namespace semiwell::cli
