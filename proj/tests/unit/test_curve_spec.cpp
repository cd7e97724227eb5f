#include <string>

#include <gtest/gtest.h>

#include "fhelix/catalog.hpp"
#include "fhelix/curve_spec.hpp"

using namespace fhelix;

namespace {

constexpr const char* kExample =
    "dimension = 3; curve = [\"cos(s/sqrt(2))\", \"s/sqrt(2)\", \"sin(s/sqrt(2))\"]; "
    "field = \"x1^2 + x2 + x3^2\"; s_range = [0, 12.566]; samples = 512";

ErrorCode parse_code(const std::string& doc) {
  try {
    parse_curve_spec(doc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << doc;
  return ErrorCode::empty_input;
}

}  // namespace

TEST(CurveSpec, ExampleDocument) {
  const CurveSpec spec = parse_curve_spec(kExample);
  EXPECT_EQ(spec.dimension, 3);
  ASSERT_EQ(spec.components.size(), 3u);
  EXPECT_EQ(spec.component_sources[1], "s/sqrt(2)");
  EXPECT_EQ(spec.field_source, "x1^2 + x2 + x3^2");
  EXPECT_EQ(spec.s_min, 0.0);
  EXPECT_EQ(spec.s_max, 12.566);
  EXPECT_EQ(spec.samples, 512);
  EXPECT_EQ(spec.tol_const, 1e-8);
  EXPECT_EQ(spec.tol_frame, 1e-10);
  EXPECT_EQ(spec, catalog_spec("paper_3_1"));
}

TEST(CurveSpec, Defaults) {
  const CurveSpec spec = parse_curve_spec(
      "dimension = 2\ncurve = [\"cos(s)\", \"sin(s)\"]\nfield = \"x1\"\ns_range = [0, 1]\n");
  EXPECT_EQ(spec.samples, 512);
  EXPECT_EQ(spec.tol_const, 1e-8);
  EXPECT_EQ(spec.tol_frame, 1e-10);
}

TEST(CurveSpec, CommentsAndOverrides) {
  const CurveSpec spec = parse_curve_spec(
      "# helix\n"
      "dimension = 3   # R^3\n"
      "curve = [\n  \"3*cos(s/5)\",\n  \"3*sin(s/5)\",\n  \"4*s/5\"\n]\n"
      "field = \"x3\"\ns_range = [-1, 1.5e1]\nsamples = 64\ntol_const = 1e-9\ntol_frame = 1e-12\n");
  EXPECT_EQ(spec.samples, 64);
  EXPECT_EQ(spec.s_min, -1.0);
  EXPECT_EQ(spec.s_max, 15.0);
  EXPECT_EQ(spec.tol_const, 1e-9);
  EXPECT_EQ(spec.tol_frame, 1e-12);
}

TEST(CurveSpec, Errors) {
  EXPECT_EQ(parse_code("dimension = 3; curve = [\"s\", \"s^2\"]; field = \"x1\"; s_range = [0, 1]"),
            ErrorCode::dimension_mismatch);
  EXPECT_EQ(parse_code("curve = [\"s\", \"s^2\"]; field = \"x1\"; s_range = [0, 1]"), ErrorCode::missing_field);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s^2\"]; s_range = [0, 1]"), ErrorCode::missing_field);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s^2\"]; field = \"x1\""), ErrorCode::missing_field);
  EXPECT_EQ(parse_code("dimension = 2; field = \"x1\"; s_range = [0, 1]"), ErrorCode::missing_field);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"x1\"]; field = \"x1\"; s_range = [0, 1]"),
            ErrorCode::wrong_symbol_kind);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s\"]; field = \"x3\"; s_range = [0, 1]"),
            ErrorCode::coord_out_of_range);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s\"]; field = \"x1\"; s_range = [1, 0]"),
            ErrorCode::invalid_value);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s\"]; field = \"x1\"; s_range = [0, 1]; samples = 4"),
            ErrorCode::invalid_value);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s\"]; field = \"x1\"; s_range = [0, 1]; tol_const = 0"),
            ErrorCode::invalid_value);
  EXPECT_EQ(parse_code("dimension = 2; curve = [\"s\", \"s\"]; field = \"x1\"; s_range = [0, 1]; colour = 3"),
            ErrorCode::invalid_value);
  EXPECT_EQ(parse_code("dimension = 1; curve = [\"s\"]; field = \"x1\"; s_range = [0, 1]"), ErrorCode::invalid_value);
}

TEST(CurveSpec, ErrorsCarryLine) {
  try {
    parse_curve_spec("dimension = 2\ncurve = [\"s\", \"s\"]\nfield = \"x1 +\"\ns_range = [0, 1]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(CurveSpec, DocumentRoundTrip) {
  for (const auto& entry : catalog()) {
    const CurveSpec spec = parse_curve_spec(entry.document);
    EXPECT_EQ(parse_curve_spec(to_document(spec)), spec) << entry.name;
  }
  const CurveSpec custom = make_curve_spec({"s", "s^2", "s^3"}, "x1 - x3", -0.5, 0.25, 99, 3e-7, 2e-11);
  EXPECT_EQ(parse_curve_spec(to_document(custom)), custom);
}

TEST(CurveSpec, MissingFile) {
  try {
    load_curve_spec("/nonexistent/dir/missing.spec");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::io_error);
    EXPECT_NE(std::string(e.what()).find("missing.spec"), std::string::npos);
  }
}
