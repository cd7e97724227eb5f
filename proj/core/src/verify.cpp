#include "fhelix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace fhelix {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

void axpy(std::vector<double>& y, double a, std::span<const double> x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

int dimension_of(std::span<const Sample> samples) {
  return samples.empty() ? 0 : samples.front().frenet.dimension();
}

double cos_theta(const Classification& c) {
  return c.mean_grad_norm > 0.0 ? c.mean_ip_tangent / c.mean_grad_norm : 0.0;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

void add_reason(std::string& reason, std::string_view text) {
  if (!reason.empty()) reason += "; ";
  reason += text;
}

double sumsq_spread(std::span<const Sample> samples, bool starred) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& smp : samples) {
    const double v = starred ? smp.harmonic.sumsq_Hstar : smp.harmonic.sumsq_H;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

VerdictEntry not_applicable(const HypothesisStatus& st) { return {Verdict::not_applicable, st.reason}; }

VerdictEntry bounded(const HypothesisStatus& st, const std::optional<double>& value, std::string_view name,
                     double tol) {
  if (!st.hypotheses_met || !value) return not_applicable(st);
  const bool ok = *value <= tol;
  return {ok ? Verdict::pass : Verdict::fail,
          std::string(name) + " = " + num(*value) + (ok ? " <= " : " > ") + num(tol)};
}

VerdictEntry constant_sum(const HypothesisStatus& st, const std::optional<double>& spread,
                          const std::optional<double>& identity, const std::optional<double>& last_min,
                          std::string_view family, double tol, double tol_frame) {
  if (!st.hypotheses_met || !spread || !last_min) return not_applicable(st);
  std::string failures;
  if (!(*spread <= tol)) add_reason(failures, std::string(family) + " sum of squares spread " + num(*spread) + " > " + num(tol));
  if (identity && !(*identity <= tol)) add_reason(failures, "angle identity residual " + num(*identity) + " > " + num(tol));
  if (!(*last_min > tol_frame)) add_reason(failures, "last harmonic curvature vanishes (min " + num(*last_min) + ")");
  if (!failures.empty()) return {Verdict::fail, failures};
  return {Verdict::pass, std::string(family) + " sum of squares spread " + num(*spread) + " <= " + num(tol)};
}

}  // namespace

std::vector<double> helix_axis(const Sample& sample, double cos_theta) {
  const int n = sample.frenet.dimension();
  std::vector<double> axis = sample.frenet.vector(1);
  for (int i = 1; i <= n - 2; ++i) axpy(axis, sample.harmonic.h(i), sample.frenet.vector(i + 2));
  for (double& a : axis) a *= sample.row.grad_norm * cos_theta;
  return axis;
}

std::vector<double> slant_axis(const Sample& sample) {
  const int n = sample.frenet.dimension();
  std::vector<double> axis = sample.frenet.vector(n);
  for (int i = 1; i <= n - 2; ++i) axpy(axis, sample.harmonic.hstar(i), sample.frenet.vector(n - 1 - i));
  for (double& a : axis) a *= sample.row.ip_last;
  return axis;
}

HelixCheck verify_helix_theorems(std::span<const Sample> samples, const Classification& c) {
  HelixCheck out;
  const int n = dimension_of(samples);
  auto& st = out.status;
  if (n < 3) add_reason(st.reason, "dimension below 3");
  if (!c.helix) add_reason(st.reason, "not an f-eikonal helix");
  if (!c.parallel_gradient) add_reason(st.reason, "gradient not parallel");
  if (!std::isnan(c.theta) && std::abs(c.theta) < kThetaScopeLimit) add_reason(st.reason, "theta below scope limit");
  st.hypotheses_met = st.reason.empty();
  if (n < 3) return out;

  const double ct = cos_theta(c);
  double sys = 0.0, axis = 0.0, tan = 0.0, cor = 0.0;
  double hmin = std::numeric_limits<double>::infinity();
  for (const auto& smp : samples) {
    const auto& fr = smp.frenet;
    const auto& h = smp.harmonic;
    const auto& grad = smp.row.grad;
    for (int i = 1; i <= n - 2; ++i) {
      sys = std::max(sys, std::abs(dot(fr.vector(i + 2), grad) - h.h(i) * smp.row.ip_tangent));
    }
    axis = std::max(axis, distance(grad, helix_axis(smp, ct)));
    tan = std::max(tan, std::abs(ct * ct * (1.0 + h.sumsq_H) - 1.0));
    hmin = std::min(hmin, std::abs(h.h(n - 2)));
    cor = std::max(cor, lemma_residuals(h, fr).tangent);
  }
  auto& r = out.residuals;
  r.sys_helix = sys;
  r.axis_helix = axis;
  r.sumsq_helix_spread = sumsq_spread(samples, false);
  r.tan_identity = tan;
  r.hn2_min = hmin;
  r.cor31 = cor;
  return out;
}

SlantCheck verify_slant_theorems(std::span<const Sample> samples, const Classification& c) {
  SlantCheck out;
  const int n = dimension_of(samples);
  auto& st = out.status;
  if (n < 3) add_reason(st.reason, "dimension below 3");
  if (!c.slant) add_reason(st.reason, "not an f-eikonal V_n-slant helix");
  if (!c.parallel_gradient) add_reason(st.reason, "gradient not parallel");
  st.hypotheses_met = st.reason.empty();
  if (n < 3) return out;

  double sys = 0.0, axis = 0.0, cor = 0.0;
  double hmin = std::numeric_limits<double>::infinity();
  for (const auto& smp : samples) {
    const auto& fr = smp.frenet;
    const auto& h = smp.harmonic;
    const auto& grad = smp.row.grad;
    for (int i = 1; i <= n - 2; ++i) {
      sys = std::max(sys, std::abs(dot(fr.vector(n - i - 1), grad) - h.hstar(i) * smp.row.ip_last));
    }
    axis = std::max(axis, distance(grad, slant_axis(smp)));
    hmin = std::min(hmin, std::abs(h.hstar(n - 2)));
    cor = std::max(cor, lemma_residuals(h, fr).normal);
  }
  auto& r = out.residuals;
  r.sys_slant = sys;
  r.axis_slant = axis;
  r.sumsq_slant_spread = sumsq_spread(samples, true);
  r.hn2star_min = hmin;
  r.cor41 = cor;
  return out;
}

Orthogonality orthogonality_checks(std::span<const Sample> samples, const Classification& c) {
  Orthogonality o;
  const int n = dimension_of(samples);
  for (const auto& smp : samples) {
    o.v2 = std::max(o.v2, std::abs(dot(smp.row.grad, smp.frenet.vector(2))));
    o.vn1 = std::max(o.vn1, std::abs(dot(smp.row.grad, smp.frenet.vector(n - 1))));
  }
  o.applicable = c.parallel_gradient;
  if (!o.applicable) o.reason = "gradient not parallel";
  return o;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::pass: return "PASS";
    case Verdict::fail: return "FAIL";
    case Verdict::not_applicable: return "NOT-APPLICABLE";
  }
  return "NOT-APPLICABLE";
}

Verdict verdict_from_string(std::string_view text) {
  if (text == "PASS") return Verdict::pass;
  if (text == "FAIL") return Verdict::fail;
  if (text == "NOT-APPLICABLE") return Verdict::not_applicable;
  throw Error(ErrorCode::invalid_value, "unknown verdict '" + std::string(text) + "'");
}

Verdicts make_verdicts(const TheoremResiduals& r, const HypothesisStatus& helix, const HypothesisStatus& slant,
                       double tol, double tol_frame) {
  Verdicts v;
  v.thm31 = bounded(helix, r.sys_helix, "sys_helix", tol);
  v.thm32 = bounded(helix, r.axis_helix, "axis_helix", tol);
  v.thm33 = constant_sum(helix, r.sumsq_helix_spread, r.tan_identity, r.hn2_min, "H", tol, tol_frame);
  v.cor31 = bounded(helix, r.cor31, "cor31", tol);
  v.thm41 = bounded(slant, r.sys_slant, "sys_slant", tol);
  v.thm42 = bounded(slant, r.axis_slant, "axis_slant", tol);
  v.thm43 = constant_sum(slant, r.sumsq_slant_spread, std::nullopt, r.hn2star_min, "H*", tol, tol_frame);
  v.cor41 = bounded(slant, r.cor41, "cor41", tol);
  return v;
}

Verification verify(std::span<const Sample> samples, const CurveSpec& spec, std::optional<double> tol) {
  Verification out;
  out.tolerance = tol.value_or(spec.tol_const);
  if (!(out.tolerance > 0.0) || !std::isfinite(out.tolerance)) {
    throw Error(ErrorCode::invalid_value, "verdict tolerance must be positive and finite");
  }
  out.classification = classify(samples, spec.tol_const);
  const auto helix = verify_helix_theorems(samples, out.classification);
  const auto slant = verify_slant_theorems(samples, out.classification);
  out.helix_status = helix.status;
  out.slant_status = slant.status;

  auto& r = out.residuals;
  r = helix.residuals;
  r.sys_slant = slant.residuals.sys_slant;
  r.axis_slant = slant.residuals.axis_slant;
  r.sumsq_slant_spread = slant.residuals.sumsq_slant_spread;
  r.hn2star_min = slant.residuals.hn2star_min;
  r.cor41 = slant.residuals.cor41;

  out.orthogonality = orthogonality_checks(samples, out.classification);
  out.verdicts = make_verdicts(r, out.helix_status, out.slant_status, out.tolerance, spec.tol_frame);
  out.theta_outside_scope = !std::isnan(out.classification.theta) && std::abs(out.classification.theta) < kThetaScopeLimit;
  return out;
}

Verification verify(const CurveSpec& spec, std::optional<double> tol) {
  const auto samples = sample_along_curve(spec);
  return verify(samples, spec, tol);
}

}  // namespace fhelix
