#include "fhelix/field_jet.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace fhelix {

namespace {

void require_same_dimension(const FieldJet& a, const FieldJet& b) {
  if (a.dimension() != b.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "field jets of different dimension combined");
  }
}

const FieldJet& check_finite(const FieldJet& a) {
  bool ok = std::isfinite(a.value());
  for (double g : a.gradient()) ok = ok && std::isfinite(g);
  for (double h : a.hessian()) ok = ok && std::isfinite(h);
  if (!ok) throw JetError(ErrorCode::overflow, "field derivative is not finite");
  return a;
}

}  // namespace

FieldJet FieldJet::constant(double value, int dimension) {
  FieldJet f;
  const auto n = static_cast<std::size_t>(dimension);
  f.value_ = value;
  f.gradient_.assign(n, 0.0);
  f.hessian_.assign(n * n, 0.0);
  return f;
}

FieldJet FieldJet::coordinate(double value, int index, int dimension) {
  FieldJet f = constant(value, dimension);
  f.gradient_.at(static_cast<std::size_t>(index)) = 1.0;
  return f;
}

double FieldJet::gradient_norm() const {
  double acc = 0.0;
  for (double g : gradient_) acc += g * g;
  return std::sqrt(acc);
}

double FieldJet::hessian_frobenius_norm() const {
  double acc = 0.0;
  for (double h : hessian_) acc += h * h;
  return std::sqrt(acc);
}

FieldJet FieldJet::chain(double phi, double dphi, double ddphi) const {
  FieldJet r;
  const std::size_t n = gradient_.size();
  r.value_ = phi;
  r.gradient_.resize(n);
  r.hessian_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) r.gradient_[i] = dphi * gradient_[i];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.hessian_[i * n + j] = dphi * hessian_[i * n + j] + ddphi * gradient_[i] * gradient_[j];
    }
  }
  return check_finite(r);
}

FieldJet operator+(const FieldJet& a, const FieldJet& b) {
  require_same_dimension(a, b);
  FieldJet r = a;
  r.value_ += b.value_;
  for (std::size_t i = 0; i < r.gradient_.size(); ++i) r.gradient_[i] += b.gradient_[i];
  for (std::size_t i = 0; i < r.hessian_.size(); ++i) r.hessian_[i] += b.hessian_[i];
  return r;
}

FieldJet operator-(const FieldJet& a) {
  FieldJet r = a;
  r.value_ = -r.value_;
  for (double& g : r.gradient_) g = -g;
  for (double& h : r.hessian_) h = -h;
  return r;
}

FieldJet operator-(const FieldJet& a, const FieldJet& b) { return a + (-b); }

FieldJet operator*(const FieldJet& a, const FieldJet& b) {
  require_same_dimension(a, b);
  const std::size_t n = a.gradient_.size();
  FieldJet r;
  r.value_ = a.value_ * b.value_;
  r.gradient_.resize(n);
  r.hessian_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) r.gradient_[i] = a.value_ * b.gradient_[i] + b.value_ * a.gradient_[i];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      r.hessian_[i * n + j] = a.value_ * b.hessian_[i * n + j] + b.value_ * a.hessian_[i * n + j] +
                              a.gradient_[i] * b.gradient_[j] + b.gradient_[i] * a.gradient_[j];
    }
  }
  return check_finite(r);
}

FieldJet operator/(const FieldJet& a, const FieldJet& b) {
  const double v = b.value();
  if (std::abs(v) < std::numeric_limits<double>::min()) {
    throw JetError(ErrorCode::division_by_zero, "field division by zero");
  }
  return a * b.chain(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

FieldJet sin(const FieldJet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(s, c, -s);
}

FieldJet cos(const FieldJet& a) {
  const double s = std::sin(a.value()), c = std::cos(a.value());
  return a.chain(c, -s, -c);
}

FieldJet exp(const FieldJet& a) {
  const double e = std::exp(a.value());
  return a.chain(e, e, e);
}

FieldJet log(const FieldJet& a) {
  const double v = a.value();
  if (!(v > 0.0)) throw JetError(ErrorCode::domain_error, "ln of non-positive value " + std::to_string(v));
  return a.chain(std::log(v), 1.0 / v, -1.0 / (v * v));
}

FieldJet sqrt(const FieldJet& a) {
  const double v = a.value();
  if (!(v > 0.0)) throw JetError(ErrorCode::domain_error, "sqrt of non-positive value " + std::to_string(v));
  const double r = std::sqrt(v);
  return a.chain(r, 0.5 / r, -0.25 / (r * v));
}

FieldJet power(const FieldJet& a, double p) {
  const double v = a.value();
  if (std::floor(p) == p) {
    // p^(k) terms with a zero coefficient must not touch pow(0, negative).
    const double f0 = std::pow(v, p);
    const double f1 = p == 0.0 ? 0.0 : p * std::pow(v, p - 1.0);
    const double f2 = (p == 0.0 || p == 1.0) ? 0.0 : p * (p - 1.0) * std::pow(v, p - 2.0);
    return a.chain(f0, f1, f2);
  }
  if (!(v > 0.0)) {
    throw JetError(ErrorCode::domain_error, "non-integer power of non-positive value " + std::to_string(v));
  }
  return a.chain(std::pow(v, p), p * std::pow(v, p - 1.0), p * (p - 1.0) * std::pow(v, p - 2.0));
}

}  // namespace fhelix
