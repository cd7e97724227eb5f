#include "fhelix_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fhelix/fhelix.hpp"

namespace fhelix::cli {

namespace {

struct Options {
  std::string spec_path;
  bool json = false;
  bool table = false;
  std::optional<double> tol;
  std::string out_path;
  std::vector<std::string> emit;
};

CurveSpec load(const std::string& path) {
  try {
    return load_curve_spec(path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::io_error) throw;
    throw Error(e.code(), path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::io_error, "cannot write '" + path + "'");
  f << text;
  if (!f) throw Error(ErrorCode::io_error, "failed writing '" + path + "'");
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
  }
}

std::string render(const VerificationReport& r, bool json) { return json ? to_json(r) : to_text(r); }

int cmd_classify(const Options& o, std::ostream& out) {
  const CurveSpec spec = load(o.spec_path);
  const auto samples = sample_along_curve(spec);
  emit(o, render(classification_report(spec, classify(samples, spec.tol_const)), o.json), out);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const CurveSpec spec = load(o.spec_path);
  const auto samples = sample_along_curve(spec);
  const Verification v = verify(samples, spec, o.tol);
  emit(o, render(verification_report(spec, v, samples, o.table), o.json), out);
  return kExitOk;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.emit.empty()) {
    for (const auto& e : catalog()) {
      out << e.name << std::string(e.name.size() < 20 ? 20 - e.name.size() : 1, ' ') << e.description << "\n";
    }
    return kExitOk;
  }
  const auto* entry = find_catalog_entry(o.emit[0]);
  if (!entry) throw Error(ErrorCode::invalid_value, "unknown catalog entry '" + o.emit[0] + "'");
  write_file(o.emit[1], std::string(entry->document));
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::degenerate_curve:
    case ErrorCode::not_regular:
    case ErrorCode::degenerate_curvature:
    case ErrorCode::domain_error:
    case ErrorCode::overflow:
    case ErrorCode::division_by_zero:
    case ErrorCode::insufficient_order:
      return kExitCurveError;
    default:
      return kExitSpecError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Frenet apparatus, harmonic curvatures and eikonal helix checks", "fhelix"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "classify a curve against its field");
  classify_cmd->add_option("spec", o.spec_path, "spec file")->required();
  classify_cmd->add_flag("--json", o.json, "machine-readable report");
  classify_cmd->add_option("--out", o.out_path, "write the report to PATH");

  auto* verify_cmd = app.add_subcommand("verify", "classify and check the theorem identities");
  verify_cmd->add_option("spec", o.spec_path, "spec file")->required();
  verify_cmd->add_flag("--json", o.json, "machine-readable report");
  verify_cmd->add_flag("--table", o.table, "include per-sample rows");
  verify_cmd->add_option("--tol", o.tol, "verdict tolerance (default: the spec's tol_const)");
  verify_cmd->add_option("--out", o.out_path, "write the report to PATH");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or emit built-in specs");
  catalog_cmd->add_option("--emit", o.emit, "write entry NAME to PATH")->expected(2)->type_name("NAME PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSpecError;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    return cmd_catalog(o, out);
  } catch (const CurveError& e) {
    err << "fhelix: " << o.spec_path << ": " << e.what() << "\n";
    return kExitCurveError;
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    err << "fhelix: ";
    if (code == kExitCurveError) err << o.spec_path << ": ";
    err << e.what() << "\n";
    return code;
  }
}

}  // namespace fhelix::cli
