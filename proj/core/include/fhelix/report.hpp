#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fhelix/verify.hpp"

namespace fhelix {

struct SpecEcho {
  int dimension = 0;
  std::vector<std::string> curve;
  std::string field;
  double s_min = 0.0;
  double s_max = 0.0;
  int samples = 0;
  double tol_const = 0.0;
  double tol_frame = 0.0;

  friend bool operator==(const SpecEcho&, const SpecEcho&) = default;
};

SpecEcho echo(const CurveSpec& spec);

struct TableRow {
  double s = 0.0;
  std::vector<double> k;      // k_1..k_{n-1}
  std::vector<double> H;      // H_1..H_{n-2}
  std::vector<double> Hstar;  // H*_1..H*_{n-2}
  double grad_norm = 0.0;
  double ip_tangent = 0.0;
  double ip_last = 0.0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

TableRow table_row(const Sample& sample);

struct Diagnostics {
  double tolerance = 0.0;
  bool theta_outside_scope = false;
  HypothesisStatus helix;
  HypothesisStatus slant;
  Orthogonality orthogonality;

  friend bool operator==(const Diagnostics&, const Diagnostics&) = default;
};

/// Output of `classify` (residuals, verdicts and diagnostics empty) or `verify`.
struct VerificationReport {
  SpecEcho spec;
  Classification classification;
  std::optional<TheoremResiduals> residuals;
  std::optional<Verdicts> verdicts;
  std::optional<Diagnostics> diagnostics;
  std::optional<std::vector<TableRow>> samples;
};

VerificationReport classification_report(const CurveSpec& spec, const Classification& c);

VerificationReport verification_report(const CurveSpec& spec, const Verification& v,
                                       std::span<const Sample> samples = {}, bool include_table = false);

/// Deterministic JSON: fixed key order, shortest round-trip floats, NaN as null.
std::string to_json(const VerificationReport& report);

/// Inverse of to_json. Throws Error(invalid_value) on malformed input.
VerificationReport report_from_json(std::string_view json);

std::string to_text(const VerificationReport& report);

}  // namespace fhelix
