#pragma once

#include "spinlab/matrix.hpp"

namespace spinlab {

inline Mat pauli(int k) {
  Mat s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli: k must be 1..3");
  }
  return s;
}

/// Standard-representation gamma matrices: gamma^0 = diag(1,1,-1,-1),
/// gamma^k = [[0, -sigma_k], [sigma_k, 0]].
struct GammaSet {
  std::array<Mat, 4> g;

  const Mat& operator[](int mu) const { return g[mu]; }

  static GammaSet standard() {
    GammaSet gs;
    gs.g[0] = Mat::Zero(4, 4);
    gs.g[0].diagonal() << 1, 1, -1, -1;
    for (int k = 1; k <= 3; ++k) {
      Mat m = Mat::Zero(4, 4);
      m.block(0, 2, 2, 2) = -pauli(k);
      m.block(2, 0, 2, 2) = pauli(k);
      gs.g[k] = m;
    }
    return gs;
  }

  /// max |{g^mu, g^nu} - 2 eta^{mu nu} I| over all 16 pairs.
  double clifford_residual() const {
    const double eta[4] = {1, -1, -1, -1};
    double worst = 0;
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) {
        Mat anti = g[mu] * g[nu] + g[nu] * g[mu];
        Mat want = Mat::Zero(4, 4);
        if (mu == nu) want = 2 * eta[mu] * Mat::Identity(4, 4);
        worst = std::max(worst, max_abs(anti - want));
      }
    return worst;
  }
};

inline GammaSet gamma_set() { return GammaSet::standard(); }

}  // namespace spinlab
