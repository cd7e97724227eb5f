#include "fhelix/harmonic.hpp"

#include <cmath>
#include <string>

namespace fhelix {

namespace {

const Jet& k(const FrenetData& fr, int i) {
  const Jet& ki = fr.curvatures.at(static_cast<std::size_t>(i - 1));
  if (!(ki.value() > 0.0)) {
    throw CurveError(ErrorCode::degenerate_curvature, "curvature k" + std::to_string(i) + " is not positive", i,
                     fr.s);
  }
  return ki;
}

void require_dimension(const FrenetData& fr) {
  if (fr.dimension() < 3) {
    throw Error(ErrorCode::invalid_value, "harmonic curvatures need dimension >= 3");
  }
}

}  // namespace

std::vector<Jet> harmonic_tangent(const FrenetData& fr) {
  require_dimension(fr);
  const int n = fr.dimension();
  std::vector<Jet> H;
  H.reserve(static_cast<std::size_t>(n - 2));
  H.push_back(k(fr, 1) / k(fr, 2));
  for (int i = 2; i <= n - 2; ++i) {
    const Jet& prev = H[static_cast<std::size_t>(i - 2)];
    Jet num = directional_derivative(prev, fr.speed);
    if (i >= 3) num += k(fr, i) * H[static_cast<std::size_t>(i - 3)];
    H.push_back(num / k(fr, i + 1));
  }
  return H;
}

std::vector<Jet> harmonic_normal(const FrenetData& fr) {
  require_dimension(fr);
  const int n = fr.dimension();
  std::vector<Jet> Hs;
  Hs.reserve(static_cast<std::size_t>(n - 1));
  Hs.push_back(Jet::constant(0.0, fr.curvatures.front().order()));
  Hs.push_back(k(fr, n - 1) / k(fr, n - 2));
  for (int i = 2; i <= n - 2; ++i) {
    Jet num = k(fr, n - i) * Hs[static_cast<std::size_t>(i - 2)] -
              directional_derivative(Hs[static_cast<std::size_t>(i - 1)], fr.speed);
    Hs.push_back(num / k(fr, n - i - 1));
  }
  return Hs;
}

HarmonicData harmonic_data(const FrenetData& fr) {
  HarmonicData out;
  out.s = fr.s;
  if (fr.dimension() < 3) {
    out.Hstar.push_back(Jet::constant(0.0, 0));
    return out;
  }
  out.H = harmonic_tangent(fr);
  out.Hstar = harmonic_normal(fr);
  for (const auto& h : out.H) out.sumsq_H += h.value() * h.value();
  for (std::size_t i = 1; i < out.Hstar.size(); ++i) out.sumsq_Hstar += out.Hstar[i].value() * out.Hstar[i].value();
  return out;
}

LemmaResiduals lemma_residuals(const HarmonicData& h, const FrenetData& fr) {
  require_dimension(fr);
  const int n = fr.dimension();
  const Jet& last = h.H.at(static_cast<std::size_t>(n - 3));
  const Jet& last_star = h.Hstar.at(static_cast<std::size_t>(n - 2));
  const double d_last = directional_derivative(last, fr.speed).value();
  const double d_last_star = directional_derivative(last_star, fr.speed).value();
  LemmaResiduals r;
  r.tangent = std::abs(d_last + fr.curvature(n - 1) * h.h(n - 3));
  r.normal = std::abs(d_last_star - fr.curvature(1) * h.hstar(n - 3));
  return r;
}

}  // namespace fhelix
