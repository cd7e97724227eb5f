#include "fhelix/report.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

namespace fhelix {

namespace {

using json = nlohmann::ordered_json;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json optional_number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

double read_number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

std::optional<double> read_optional(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

json numbers(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(number(x));
  return a;
}

std::vector<double> read_numbers(const json& j) {
  std::vector<double> out;
  for (const auto& x : j) out.push_back(read_number(x));
  return out;
}

json spec_json(const SpecEcho& e) {
  json j;
  j["dimension"] = e.dimension;
  j["curve"] = e.curve;
  j["field"] = e.field;
  j["s_range"] = json::array({number(e.s_min), number(e.s_max)});
  j["samples"] = e.samples;
  j["tol_const"] = number(e.tol_const);
  j["tol_frame"] = number(e.tol_frame);
  return j;
}

SpecEcho read_spec(const json& j) {
  SpecEcho e;
  e.dimension = j.at("dimension").get<int>();
  e.curve = j.at("curve").get<std::vector<std::string>>();
  e.field = j.at("field").get<std::string>();
  e.s_min = read_number(j.at("s_range").at(0));
  e.s_max = read_number(j.at("s_range").at(1));
  e.samples = j.at("samples").get<int>();
  e.tol_const = read_number(j.at("tol_const"));
  e.tol_frame = read_number(j.at("tol_frame"));
  return e;
}

json classification_json(const Classification& c) {
  json j;
  j["eikonal"] = c.eikonal;
  j["helix"] = c.helix;
  j["slant"] = c.slant;
  j["parallel_gradient"] = c.parallel_gradient;
  j["theta"] = number(c.theta);
  j["spreads"] = {{"grad_norm", number(c.spreads.grad_norm)},
                  {"ip_tangent", number(c.spreads.ip_tangent)},
                  {"ip_last", number(c.spreads.ip_last)}};
  j["mean_grad_norm"] = number(c.mean_grad_norm);
  j["mean_ip_tangent"] = number(c.mean_ip_tangent);
  j["mean_ip_last"] = number(c.mean_ip_last);
  j["max_hessian_norm"] = number(c.max_hessian_norm);
  return j;
}

Classification read_classification(const json& j) {
  Classification c;
  c.eikonal = j.at("eikonal").get<bool>();
  c.helix = j.at("helix").get<bool>();
  c.slant = j.at("slant").get<bool>();
  c.parallel_gradient = j.at("parallel_gradient").get<bool>();
  c.theta = read_number(j.at("theta"));
  const auto& sp = j.at("spreads");
  c.spreads = {read_number(sp.at("grad_norm")), read_number(sp.at("ip_tangent")), read_number(sp.at("ip_last"))};
  c.mean_grad_norm = read_number(j.at("mean_grad_norm"));
  c.mean_ip_tangent = read_number(j.at("mean_ip_tangent"));
  c.mean_ip_last = read_number(j.at("mean_ip_last"));
  c.max_hessian_norm = read_number(j.at("max_hessian_norm"));
  return c;
}

// Field order shared by the writer and the reader.
template <class R, class F>
void for_each_residual(R& r, F&& f) {
  f("sys_helix", r.sys_helix);
  f("axis_helix", r.axis_helix);
  f("sumsq_helix_spread", r.sumsq_helix_spread);
  f("tan_identity", r.tan_identity);
  f("hn2_min", r.hn2_min);
  f("cor31", r.cor31);
  f("sys_slant", r.sys_slant);
  f("axis_slant", r.axis_slant);
  f("sumsq_slant_spread", r.sumsq_slant_spread);
  f("hn2star_min", r.hn2star_min);
  f("cor41", r.cor41);
}

template <class V, class F>
void for_each_verdict(V& v, F&& f) {
  f("thm31", v.thm31);
  f("thm32", v.thm32);
  f("thm33", v.thm33);
  f("cor31", v.cor31);
  f("thm41", v.thm41);
  f("thm42", v.thm42);
  f("thm43", v.thm43);
  f("cor41", v.cor41);
}

json status_json(const HypothesisStatus& st) {
  return {{"met", st.hypotheses_met}, {"reason", st.reason}};
}

HypothesisStatus read_status(const json& j) {
  return {j.at("met").get<bool>(), j.at("reason").get<std::string>()};
}

json diagnostics_json(const Diagnostics& d) {
  json j;
  j["tolerance"] = number(d.tolerance);
  j["theta_outside_scope"] = d.theta_outside_scope;
  j["helix_hypotheses"] = status_json(d.helix);
  j["slant_hypotheses"] = status_json(d.slant);
  j["orthogonality"] = {{"v2", number(d.orthogonality.v2)},
                        {"vn1", number(d.orthogonality.vn1)},
                        {"applicable", d.orthogonality.applicable},
                        {"reason", d.orthogonality.reason}};
  return j;
}

Diagnostics read_diagnostics(const json& j) {
  Diagnostics d;
  d.tolerance = read_number(j.at("tolerance"));
  d.theta_outside_scope = j.at("theta_outside_scope").get<bool>();
  d.helix = read_status(j.at("helix_hypotheses"));
  d.slant = read_status(j.at("slant_hypotheses"));
  const auto& o = j.at("orthogonality");
  d.orthogonality.v2 = read_number(o.at("v2"));
  d.orthogonality.vn1 = read_number(o.at("vn1"));
  d.orthogonality.applicable = o.at("applicable").get<bool>();
  d.orthogonality.reason = o.at("reason").get<std::string>();
  return d;
}

json row_json(const TableRow& r) {
  json j;
  j["s"] = number(r.s);
  j["k"] = numbers(r.k);
  j["H"] = numbers(r.H);
  j["Hstar"] = numbers(r.Hstar);
  j["grad_norm"] = number(r.grad_norm);
  j["ip_tangent"] = number(r.ip_tangent);
  j["ip_last"] = number(r.ip_last);
  return j;
}

TableRow read_row(const json& j) {
  TableRow r;
  r.s = read_number(j.at("s"));
  r.k = read_numbers(j.at("k"));
  r.H = read_numbers(j.at("H"));
  r.Hstar = read_numbers(j.at("Hstar"));
  r.grad_norm = read_number(j.at("grad_norm"));
  r.ip_tangent = read_number(j.at("ip_tangent"));
  r.ip_last = read_number(j.at("ip_last"));
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::string fmt(const std::optional<double>& x) { return x ? fmt(*x) : std::string("n/a"); }

}  // namespace

SpecEcho echo(const CurveSpec& spec) {
  return {spec.dimension, spec.component_sources, spec.field_source, spec.s_min, spec.s_max,
          spec.samples,   spec.tol_const,         spec.tol_frame};
}

TableRow table_row(const Sample& sample) {
  TableRow r;
  r.s = sample.row.s;
  for (const auto& k : sample.frenet.curvatures) r.k.push_back(k.value());
  for (const auto& h : sample.harmonic.H) r.H.push_back(h.value());
  for (std::size_t i = 1; i < sample.harmonic.Hstar.size(); ++i) r.Hstar.push_back(sample.harmonic.Hstar[i].value());
  r.grad_norm = sample.row.grad_norm;
  r.ip_tangent = sample.row.ip_tangent;
  r.ip_last = sample.row.ip_last;
  return r;
}

VerificationReport classification_report(const CurveSpec& spec, const Classification& c) {
  VerificationReport r;
  r.spec = echo(spec);
  r.classification = c;
  return r;
}

VerificationReport verification_report(const CurveSpec& spec, const Verification& v, std::span<const Sample> samples,
                                       bool include_table) {
  VerificationReport r = classification_report(spec, v.classification);
  r.residuals = v.residuals;
  r.verdicts = v.verdicts;
  r.diagnostics = Diagnostics{v.tolerance, v.theta_outside_scope, v.helix_status, v.slant_status, v.orthogonality};
  if (include_table) {
    std::vector<TableRow> rows;
    rows.reserve(samples.size());
    for (const auto& smp : samples) rows.push_back(table_row(smp));
    r.samples = std::move(rows);
  }
  return r;
}

std::string to_json(const VerificationReport& report) {
  json j;
  j["spec"] = spec_json(report.spec);
  j["classification"] = classification_json(report.classification);
  if (report.residuals) {
    json r;
    for_each_residual(*report.residuals, [&](const char* name, const std::optional<double>& x) {
      r[name] = optional_number(x);
    });
    j["residuals"] = std::move(r);
  }
  if (report.verdicts) {
    json v;
    for_each_verdict(*report.verdicts, [&](const char* name, const VerdictEntry& e) {
      v[name] = {{"verdict", std::string(to_string(e.verdict))}, {"reason", e.reason}};
    });
    j["verdicts"] = std::move(v);
  }
  if (report.diagnostics) j["diagnostics"] = diagnostics_json(*report.diagnostics);
  if (report.samples) {
    json rows = json::array();
    for (const auto& row : *report.samples) rows.push_back(row_json(row));
    j["samples"] = std::move(rows);
  }
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    VerificationReport r;
    r.spec = read_spec(j.at("spec"));
    r.classification = read_classification(j.at("classification"));
    if (j.contains("residuals")) {
      TheoremResiduals res;
      const auto& src = j.at("residuals");
      for_each_residual(res, [&](const char* name, std::optional<double>& x) { x = read_optional(src.at(name)); });
      r.residuals = res;
    }
    if (j.contains("verdicts")) {
      Verdicts v;
      const auto& src = j.at("verdicts");
      for_each_verdict(v, [&](const char* name, VerdictEntry& e) {
        e.verdict = verdict_from_string(src.at(name).at("verdict").get<std::string>());
        e.reason = src.at(name).at("reason").get<std::string>();
      });
      r.verdicts = v;
    }
    if (j.contains("diagnostics")) r.diagnostics = read_diagnostics(j.at("diagnostics"));
    if (j.contains("samples")) {
      std::vector<TableRow> rows;
      for (const auto& row : j.at("samples")) rows.push_back(read_row(row));
      r.samples = std::move(rows);
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::invalid_value, std::string("malformed report: ") + e.what());
  }
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  const auto& sp = report.spec;
  os << "curve in R^" << sp.dimension << ":";
  for (const auto& c : sp.curve) os << "  " << c;
  os << "\nfield: " << sp.field << "\n";
  os << "s in [" << fmt(sp.s_min) << ", " << fmt(sp.s_max) << "], " << sp.samples << " samples\n\n";

  const auto& c = report.classification;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "classification\n";
  os << "  eikonal            " << yes(c.eikonal) << "   |grad f| = " << fmt(c.mean_grad_norm)
     << " (spread " << fmt(c.spreads.grad_norm) << ")\n";
  os << "  helix              " << yes(c.helix) << "   <grad f, V1> = " << fmt(c.mean_ip_tangent) << " (spread "
     << fmt(c.spreads.ip_tangent) << ")\n";
  os << "  slant              " << yes(c.slant) << "   <grad f, Vn> = " << fmt(c.mean_ip_last) << " (spread "
     << fmt(c.spreads.ip_last) << ")\n";
  os << "  parallel gradient  " << yes(c.parallel_gradient) << "   max |Hess f| = " << fmt(c.max_hessian_norm)
     << "\n";
  os << "  theta              " << fmt(c.theta) << "\n";

  if (report.residuals) {
    os << "\nresiduals\n";
    for_each_residual(*report.residuals, [&](const char* name, const std::optional<double>& x) {
      os << "  " << name << std::string(20 - std::string_view(name).size(), ' ') << fmt(x) << "\n";
    });
  }
  if (report.verdicts) {
    os << "\nverdicts\n";
    for_each_verdict(*report.verdicts, [&](const char* name, const VerdictEntry& e) {
      os << "  " << name << "  " << to_string(e.verdict);
      if (!e.reason.empty()) os << "  (" << e.reason << ")";
      os << "\n";
    });
  }
  if (report.diagnostics) {
    const auto& d = *report.diagnostics;
    os << "\ntolerance " << fmt(d.tolerance);
    if (d.theta_outside_scope) os << ", theta outside theorem scope";
    os << "\northogonality  max|<grad f, V2>| = " << fmt(d.orthogonality.v2)
       << "  max|<grad f, V(n-1)>| = " << fmt(d.orthogonality.vn1);
    if (!d.orthogonality.applicable) os << "  (diagnostic only: " << d.orthogonality.reason << ")";
    os << "\n";
  }
  if (report.samples) {
    os << "\ns  k...  H...  H*...  |grad f|  <grad f,V1>  <grad f,Vn>\n";
    for (const auto& r : *report.samples) {
      os << fmt(r.s);
      for (double x : r.k) os << " " << fmt(x);
      os << " |";
      for (double x : r.H) os << " " << fmt(x);
      os << " |";
      for (double x : r.Hstar) os << " " << fmt(x);
      os << " | " << fmt(r.grad_norm) << " " << fmt(r.ip_tangent) << " " << fmt(r.ip_last) << "\n";
    }
  }
  return os.str();
}

}  // namespace fhelix
