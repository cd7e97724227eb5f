#include "fhelix/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fhelix {

namespace {

std::size_t common_size(const Jet& a, const Jet& b) {
  return static_cast<std::size_t>(std::min(a.order(), b.order())) + 1;
}

double factorial(int j) {
  double f = 1.0;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

}  // namespace

Jet::Jet(std::vector<double> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw Error(ErrorCode::invalid_value, "a jet needs at least one coefficient");
}

Jet Jet::constant(double value, int order) {
  std::vector<double> c(static_cast<std::size_t>(std::max(order, 0)) + 1, 0.0);
  c[0] = value;
  return Jet(std::move(c));
}

Jet Jet::variable(double s0, int order) {
  Jet j = constant(s0, order);
  if (order >= 1) j.c_[1] = 1.0;
  return j;
}

double Jet::derivative_value(int j) const { return factorial(j) * c_.at(static_cast<std::size_t>(j)); }

Jet Jet::derivative() const {
  if (order() < 1) {
    throw JetError(ErrorCode::insufficient_order, "cannot differentiate an order-0 jet");
  }
  std::vector<double> d(c_.size() - 1);
  for (std::size_t j = 0; j < d.size(); ++j) d[j] = static_cast<double>(j + 1) * c_[j + 1];
  return Jet(std::move(d));
}

Jet Jet::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw JetError(ErrorCode::insufficient_order,
                   "cannot truncate order-" + std::to_string(this->order()) + " jet to order " + std::to_string(order));
  }
  return Jet(std::vector<double>(c_.begin(), c_.begin() + order + 1));
}

Jet& Jet::operator+=(const Jet& o) {
  c_.resize(common_size(*this, o));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  c_.resize(common_size(*this, o));
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Jet& Jet::operator*=(const Jet& o) { return *this = *this * o; }
Jet& Jet::operator/=(const Jet& o) { return *this = *this / o; }

Jet& Jet::operator*=(double k) {
  for (double& x : c_) x *= k;
  return *this;
}

Jet operator-(Jet a) {
  for (double& x : a.c_) x = -x;
  return a;
}

Jet operator+(Jet a, double k) {
  a.c_[0] += k;
  return a;
}

Jet operator/(Jet a, double k) {
  if (std::abs(k) < std::numeric_limits<double>::min()) {
    throw JetError(ErrorCode::division_by_zero, "jet divided by zero constant");
  }
  for (double& x : a.c_) x /= k;
  return a;
}

Jet operator*(const Jet& a, const Jet& b) {
  const std::size_t n = common_size(a, b);
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
    c[k] = acc;
  }
  return Jet(std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
  const double b0 = b.c_[0];
  if (std::abs(b0) < std::numeric_limits<double>::min()) {
    throw JetError(ErrorCode::division_by_zero, "jet division by a series with zero value");
  }
  const std::size_t n = common_size(a, b);
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.c_[j] * c[k - j];
    c[k] = acc / b0;
  }
  return check_finite(Jet(std::move(c)));
}

const Jet& check_finite(const Jet& a) {
  for (double x : a.coeffs()) {
    if (!std::isfinite(x)) throw JetError(ErrorCode::overflow, "jet coefficient is not finite");
  }
  return a;
}

SinCos sincos(const Jet& a) {
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<double> s(n), c(n);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double ss = 0.0, cc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      const double ja = static_cast<double>(j) * a[static_cast<int>(j)];
      ss += ja * c[k - j];
      cc -= ja * s[k - j];
    }
    s[k] = ss / static_cast<double>(k);
    c[k] = cc / static_cast<double>(k);
  }
  SinCos out{Jet(std::move(s)), Jet(std::move(c))};
  check_finite(out.sin);
  check_finite(out.cos);
  return out;
}

Jet sin(const Jet& a) { return sincos(a).sin; }
Jet cos(const Jet& a) { return sincos(a).cos; }

Jet exp(const Jet& a) {
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<double> e(n);
  e[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<double>(j) * a[static_cast<int>(j)] * e[k - j];
    e[k] = acc / static_cast<double>(k);
  }
  return check_finite(Jet(std::move(e)));
}

Jet log(const Jet& a) {
  const double a0 = a[0];
  if (!(a0 > 0.0)) throw JetError(ErrorCode::domain_error, "ln of non-positive value " + std::to_string(a0));
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<double> l(n);
  l[0] = std::log(a0);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j < k; ++j) acc += static_cast<double>(j) * l[j] * a[static_cast<int>(k - j)];
    l[k] = (a[static_cast<int>(k)] - acc / static_cast<double>(k)) / a0;
  }
  return check_finite(Jet(std::move(l)));
}

Jet sqrt(const Jet& a) {
  const double a0 = a[0];
  if (a0 < 0.0 || (a0 == 0.0 && a.order() > 0)) {
    throw JetError(ErrorCode::domain_error, "sqrt of non-positive value " + std::to_string(a0));
  }
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<double> r(n);
  r[0] = std::sqrt(a0);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = a[static_cast<int>(k)];
    for (std::size_t j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = acc / (2.0 * r[0]);
  }
  return check_finite(Jet(std::move(r)));
}

Jet power(const Jet& a, double p) {
  if (!std::isfinite(p)) throw JetError(ErrorCode::domain_error, "non-finite exponent");
  if (std::floor(p) == p && std::abs(p) <= 1e6) {
    auto e = static_cast<long>(std::abs(p));
    Jet result = Jet::constant(1.0, a.order());
    Jet base = a;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return check_finite(p < 0 ? Jet::constant(1.0, a.order()) / result : result);
  }
  const double a0 = a[0];
  if (!(a0 > 0.0)) {
    throw JetError(ErrorCode::domain_error, "non-integer power of non-positive value " + std::to_string(a0));
  }
  const auto n = static_cast<std::size_t>(a.order()) + 1;
  std::vector<double> y(n);
  y[0] = std::pow(a0, p);
  for (std::size_t k = 1; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += (p * static_cast<double>(j) - static_cast<double>(k - j)) * a[static_cast<int>(j)] * y[k - j];
    }
    y[k] = acc / (static_cast<double>(k) * a0);
  }
  return check_finite(Jet(std::move(y)));
}

}  // namespace fhelix
