#pragma once

#include <vector>

#include "fhelix/frenet.hpp"
#include "fhelix/jet.hpp"

namespace fhelix {

/// Both harmonic-curvature families at one sample.
///
/// Tangent family: H_0 := 0, H_1 = k_1/k_2, H_i = (V_1[H_{i-1}] + k_i H_{i-2}) / k_{i+1}.
/// Normal family:  H*_0 = 0, H*_1 = k_{n-1}/k_{n-2}, H*_i = (k_{n-i} H*_{i-2} - V_1[H*_{i-1}]) / k_{n-i-1}.
struct HarmonicData {
  double s = 0.0;
  std::vector<Jet> H;      // H[i-1] = H_i, i = 1..n-2
  std::vector<Jet> Hstar;  // Hstar[i] = H*_i, i = 0..n-2
  double sumsq_H = 0.0;      // sum of H_i^2, i = 1..n-2
  double sumsq_Hstar = 0.0;  // sum of H*_i^2, i = 1..n-2

  /// H_i value with H_0 = 0.
  double h(int i) const { return i == 0 ? 0.0 : H.at(static_cast<std::size_t>(i - 1)).value(); }
  double hstar(int i) const { return Hstar.at(static_cast<std::size_t>(i)).value(); }
};

/// H_1..H_{n-2}. Requires n >= 3.
std::vector<Jet> harmonic_tangent(const FrenetData& frenet);

/// H*_0..H*_{n-2}. Requires n >= 3.
std::vector<Jet> harmonic_normal(const FrenetData& frenet);

/// Both families and their sums of squares. For n = 2 both families are empty
/// apart from H*_0.
HarmonicData harmonic_data(const FrenetData& frenet);

struct LemmaResiduals {
  double tangent = 0.0;  // |V_1[H_{n-2}] + k_{n-1} H_{n-3}|
  double normal = 0.0;   // |V_1[H*_{n-2}] - k_1 H*_{n-3}|
};

/// Pointwise residuals of the derivative identities that characterize constant
/// sums of squares of either family. With n = 3 they reduce to |H_1'| and |H*_1'|.
LemmaResiduals lemma_residuals(const HarmonicData& harmonic, const FrenetData& frenet);

}  // namespace fhelix
