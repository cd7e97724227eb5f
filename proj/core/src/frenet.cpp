#include "fhelix/frenet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace fhelix {

namespace {

std::string at_s(double s) {
  std::ostringstream os;
  os.precision(17);
  os << s;
  return os.str();
}

JetVector derivative(const JetVector& v) {
  JetVector d;
  d.reserve(v.size());
  for (const auto& c : v) d.push_back(c.derivative());
  return d;
}

double value_norm(const JetVector& v) {
  double acc = 0.0;
  for (const auto& c : v) acc += c.value() * c.value();
  return std::sqrt(acc);
}

// u -= <u, e> e
void remove_component(JetVector& u, const JetVector& e) {
  const Jet p = dot(u, e);
  for (std::size_t k = 0; k < u.size(); ++k) u[k] -= p * e[k];
}

}  // namespace

Jet dot(std::span<const Jet> a, std::span<const Jet> b) {
  Jet acc = a[0] * b[0];
  for (std::size_t k = 1; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

Jet directional_derivative(const Jet& g, const Jet& speed) { return g.derivative() / speed; }

std::vector<double> FrenetData::vector(int i) const {
  const auto& v = frame.at(static_cast<std::size_t>(i - 1));
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(c.value());
  return out;
}

double FrenetData::orthonormality_defect() const {
  double worst = 0.0;
  const int n = dimension();
  for (int i = 1; i <= n; ++i) {
    const auto vi = vector(i);
    for (int j = i; j <= n; ++j) {
      const auto vj = vector(j);
      double ip = 0.0;
      for (std::size_t k = 0; k < vi.size(); ++k) ip += vi[k] * vj[k];
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

double FrenetData::frenet_residual() const {
  double worst = 0.0;
  const int n = dimension();
  const double v = speed.value();
  for (int i = 1; i <= n; ++i) {
    const auto& vi = frame[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < n; ++k) {
      double r = vi[static_cast<std::size_t>(k)][1] / v;
      if (i > 1) r += curvature(i - 1) * frame[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(k)].value();
      if (i < n) r -= curvature(i) * frame[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].value();
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

FrenetData frenet_apparatus(std::span<const Jet> curve, double tol_frame, double s) {
  const int n = static_cast<int>(curve.size());
  if (n < 2) throw Error(ErrorCode::invalid_value, "Frenet frame needs dimension >= 2");
  int order = curve[0].order();
  for (const auto& c : curve) order = std::min(order, c.order());
  if (order < n + 1) {
    throw JetError(ErrorCode::insufficient_order, "Frenet apparatus in dimension " + std::to_string(n) +
                                                      " needs curve jets of order >= " + std::to_string(n + 1) +
                                                      ", got " + std::to_string(order));
  }

  FrenetData out;
  out.s = s;

  // derivatives[i] = alpha^(i+1), order K-(i+1)
  std::vector<JetVector> derivatives;
  derivatives.push_back(derivative(JetVector(curve.begin(), curve.end())));
  for (int i = 1; i < n; ++i) derivatives.push_back(derivative(derivatives.back()));

  const Jet speed_sq = dot(derivatives[0], derivatives[0]);
  if (!(std::sqrt(speed_sq.value()) > tol_frame)) {
    throw CurveError(ErrorCode::not_regular, "curve is not regular at s = " + at_s(s) + " (|alpha'| = " +
                                                 std::to_string(std::sqrt(speed_sq.value())) + ")",
                     0, s);
  }
  out.speed = sqrt(speed_sq);

  double scale = 0.0;
  for (int i = 0; i < n; ++i) {
    JetVector u = derivatives[static_cast<std::size_t>(i)];
    scale = std::max(scale, value_norm(u));
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : out.frame) remove_component(u, e);
    }
    const double residual = value_norm(u);
    if (!(residual > tol_frame * scale)) {
      throw CurveError(ErrorCode::degenerate_curve,
                       "DegenerateCurve(" + std::to_string(i + 1) + "): derivative " + std::to_string(i + 1) +
                           " is dependent on its predecessors at s = " + at_s(s) + " (curve not of proper " +
                           std::to_string(n) + ")",
                       i + 1, s);
    }
    const Jet inv_norm = power(dot(u, u), -0.5);
    for (auto& c : u) c = c * inv_norm;
    out.frame.push_back(std::move(u));
  }

  for (int i = 0; i + 1 < n; ++i) {
    const JetVector dv = derivative(out.frame[static_cast<std::size_t>(i)]);
    Jet k = dot(dv, out.frame[static_cast<std::size_t>(i + 1)]) / out.speed;
    if (!(k.value() > tol_frame)) {
      throw CurveError(ErrorCode::degenerate_curvature,
                       "curvature k" + std::to_string(i + 1) + " = " + std::to_string(k.value()) +
                           " is not positive at s = " + at_s(s),
                       i + 1, s);
    }
    out.curvatures.push_back(std::move(k));
  }
  return out;
}

}  // namespace fhelix
