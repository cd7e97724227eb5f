#include "fhelix/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "fhelix/jet_eval.hpp"

namespace fhelix {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::string at_s(double s) {
  std::ostringstream os;
  os.precision(17);
  os << s;
  return os.str();
}

template <class Proj>
std::vector<double> column(std::span<const Sample> samples, Proj proj) {
  std::vector<double> out;
  out.reserve(samples.size());
  for (const auto& smp : samples) out.push_back(proj(smp.row));
  return out;
}

}  // namespace

std::vector<double> sample_grid(const CurveSpec& spec) {
  const int count = spec.samples;
  std::vector<double> grid(static_cast<std::size_t>(count));
  const double h = (spec.s_max - spec.s_min) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) grid[static_cast<std::size_t>(i)] = spec.s_min + h * i;
  grid.back() = spec.s_max;
  return grid;
}

Sample sample_at(const CurveSpec& spec, double s) {
  Sample out;
  try {
    const auto jets = eval_curve_jet(spec, s, default_jet_order(spec.dimension));
    out.frenet = frenet_apparatus(jets, spec.tol_frame, s);
    out.harmonic = harmonic_data(out.frenet);

    SampleRow& row = out.row;
    row.s = s;
    for (const auto& j : jets) row.point.push_back(j.value());
    const FieldJet f = eval_field_jet(spec, row.point);
    row.grad.assign(f.gradient().begin(), f.gradient().end());
    row.grad_norm = f.gradient_norm();
    row.ip_tangent = dot(row.grad, out.frenet.vector(1));
    row.ip_last = dot(row.grad, out.frenet.vector(spec.dimension));
    row.hessian_norm = f.hessian_frobenius_norm();
  } catch (const JetError& e) {
    throw JetError(e.code(), std::string(e.what()) + " at s = " + at_s(s));
  }
  return out;
}

std::vector<Sample> sample_along_curve(const CurveSpec& spec) {
  validate(spec);
  std::vector<Sample> out;
  const auto grid = sample_grid(spec);
  out.reserve(grid.size());
  for (double s : grid) out.push_back(sample_at(spec, s));
  return out;
}

Constancy constancy(std::span<const double> values, double tol) {
  if (values.empty()) throw Error(ErrorCode::empty_input, "constancy of an empty list");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  Constancy c;
  c.spread = *hi - *lo;
  c.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  c.is_const = c.spread <= tol * (1.0 + std::abs(c.mean));
  return c;
}

Classification classify(std::span<const Sample> samples, double tol_const) {
  const auto grad_norm = column(samples, [](const SampleRow& r) { return r.grad_norm; });
  const auto ip_tangent = column(samples, [](const SampleRow& r) { return r.ip_tangent; });
  const auto ip_last = column(samples, [](const SampleRow& r) { return r.ip_last; });
  const auto hess = column(samples, [](const SampleRow& r) { return r.hessian_norm; });

  const Constancy g = constancy(grad_norm, tol_const);
  const Constancy t = constancy(ip_tangent, tol_const);
  const Constancy l = constancy(ip_last, tol_const);

  Classification c;
  c.eikonal = g.is_const;
  c.helix = c.eikonal && t.is_const && std::abs(t.mean) > tol_const;
  c.slant = c.eikonal && l.is_const && std::abs(l.mean) > tol_const;
  c.max_hessian_norm = *std::max_element(hess.begin(), hess.end());
  c.parallel_gradient = c.max_hessian_norm <= tol_const;
  c.spreads = {g.spread, t.spread, l.spread};
  c.mean_grad_norm = g.mean;
  c.mean_ip_tangent = t.mean;
  c.mean_ip_last = l.mean;
  c.theta = g.mean > 0.0 ? std::acos(std::clamp(t.mean / g.mean, -1.0, 1.0))
                         : std::numeric_limits<double>::quiet_NaN();
  return c;
}

Classification classify(const CurveSpec& spec) {
  const auto samples = sample_along_curve(spec);
  return classify(samples, spec.tol_const);
}

}  // namespace fhelix
