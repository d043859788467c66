#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinlab/gamma.hpp"
#include "spinlab/matrix.hpp"
#include "spinlab/report.hpp"
#include "spinlab/rng.hpp"

namespace spinlab::liealg {

enum class Side { right, left, joint };
enum class Rep { so6, su4 };

struct GeneratorName {
  char kind;  // 'J' or 'K'
  int index;  // 1..3
  Side side = Side::right;
};

namespace detail {

inline Mat unit6(int r, int c) {
  Mat m = Mat::Zero(6, 6);
  m(r, c) = 1;
  return m;
}

/// Hermitian rotation generator i(E_rc - E_cr) on the given plane.
inline Mat plane6(int r, int c) { return cplx(0, 1) * (unit6(r, c) - unit6(c, r)); }

}  // namespace detail

/// Boost generators of the right family: i in the (x^k, t^3) plane.
inline Mat k_right(int i) {
  switch (i) {
    case 1: return detail::plane6(0, 3);
    case 2: return detail::plane6(1, 3);
    case 3: return detail::plane6(2, 3);
  }
  throw std::invalid_argument("k_right: index 1..3");
}

/// Boost generators of the left (virtual) family; K-left-3 coincides with
/// K-right-3.
inline Mat k_left(int i) {
  switch (i) {
    case 1: return detail::plane6(2, 5);
    case 2: return detail::plane6(2, 4);
    case 3: return k_right(3);
  }
  throw std::invalid_argument("k_left: index 1..3");
}

/// Rotations defined by the boost brackets, J_i = -i [K_j, K_k] cyclic.
/// The sign convention of every J follows this defining relation.
inline Mat j_right(int i) {
  static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
  if (i < 1 || i > 3) throw std::invalid_argument("j_right: index 1..3");
  return cplx(0, -1) * bracket(k_right(cyc[i][0]), k_right(cyc[i][1]));
}

inline std::array<Mat, 3> derive_left_rotations() {
  auto mk = [](int j, int k) { return Mat(cplx(0, -1) * bracket(k_left(j), k_left(k))); };
  return {mk(2, 3), mk(3, 1), mk(1, 2)};
}

inline Mat so6_generator(const GeneratorName& n) {
  if (n.index < 1 || n.index > 3) throw std::invalid_argument("so6_generator: index 1..3");
  if (n.side == Side::right) return n.kind == 'K' ? k_right(n.index) : j_right(n.index);
  if (n.side == Side::left) {
    if (n.kind == 'K') return k_left(n.index);
    throw std::invalid_argument("so6_generator: left rotations come from derive_left_rotations");
  }
  throw std::invalid_argument("so6_generator: side must be right or left");
}

namespace detail {

/// su(4) basis matrices as displayed (anti-Hermitian); callers Hermitianize.
inline Mat su4_display(char kind, int index) {
  Mat m = Mat::Zero(4, 4);
  const cplx i(0, 1);
  if (kind == 'J') {
    switch (index) {
      case 1:
        m << 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0;
        return 0.5 * m;
      case 2:
        m << 0, i, 0, 0, i, 0, 0, 0, 0, 0, 0, i, 0, 0, i, 0;
        return 0.5 * m;
      case 3:
        m.diagonal() << i, -i, i, -i;
        return 0.5 * m;
    }
  } else {
    switch (index) {
      case 1:
        m << 0, 0, 0, i, 0, 0, -i, 0, 0, -i, 0, 0, i, 0, 0, 0;
        return 0.5 * m;
      case 2:
        m << 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0;
        return 0.5 * m;
      case 3:
        m << 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0;
        return 0.5 * m;
    }
  }
  throw std::invalid_argument("su4_display: bad name");
}

}  // namespace detail

/// Hermitian su(4) generators for the exp(iX) convention: K's are i times the
/// displayed matrices, J's come from the boost brackets exactly as on the so6
/// side (J_i = -i [K_j, K_k], cyclic).
inline Mat su4_generator(const GeneratorName& n) {
  if (n.side != Side::joint) throw std::invalid_argument("su4_generator: side must be joint");
  if (n.index < 1 || n.index > 3) throw std::invalid_argument("su4_generator: index 1..3");
  auto K = [](int idx) { return Mat(cplx(0, 1) * detail::su4_display('K', idx)); };
  if (n.kind == 'K') return K(n.index);
  static const int cyc[4][2] = {{0, 0}, {2, 3}, {3, 1}, {1, 2}};
  return cplx(0, -1) * bracket(K(cyc[n.index][0]), K(cyc[n.index][1]));
}

/// Six matrices (J1,J2,J3,K1,K2,K3) spanning a closed algebra; the K1, K2
/// slots are generated as -i[J2,K3] and +i[J1,K3].
inline std::array<Mat, 6> joint_basis(Rep rep) {
  std::array<Mat, 6> b;
  if (rep == Rep::su4) {
    for (int i = 0; i < 3; ++i) b[i] = su4_generator({'J', i + 1, Side::joint});
    b[5] = su4_generator({'K', 3, Side::joint});
  } else {
    for (int i = 0; i < 3; ++i) b[i] = j_right(i + 1);
    b[5] = k_right(3);
  }
  b[3] = cplx(0, -1) * bracket(b[1], b[5]);
  b[4] = cplx(0, 1) * bracket(b[0], b[5]);
  return b;
}

struct AlgebraElement {
  Eigen::Matrix<double, 6, 1> coeffs = Eigen::Matrix<double, 6, 1>::Zero();
  Rep rep = Rep::su4;
};

inline Mat realize(const AlgebraElement& x) {
  auto basis = joint_basis(x.rep);
  Mat m = Mat::Zero(basis[0].rows(), basis[0].cols());
  for (int i = 0; i < 6; ++i) m += x.coeffs(i) * basis[i];
  return m;
}

/// Identity on coefficients, realization swapped; an isomorphism because the
/// two joint structure-constant tensors agree.
inline AlgebraElement iso_map(const AlgebraElement& x) {
  AlgebraElement y = x;
  y.rep = (x.rep == Rep::su4) ? Rep::so6 : Rep::su4;
  return y;
}

struct StructureConstants {
  // [e_a, e_b] = i sum_c tensor[a][b][c] e_c
  std::array<std::array<std::array<double, 6>, 6>, 6> c{};
  double closure_residual = 0.0;

  double antisymmetry_residual() const {
    double worst = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(c[a][b][k] + c[b][a][k]));
    return worst;
  }

  double jacobi_residual() const {
    double worst = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int d = 0; d < 6; ++d)
          for (int e = 0; e < 6; ++e) {
            double s = 0;
            for (int m = 0; m < 6; ++m)
              s += c[a][b][m] * c[m][d][e] + c[b][d][m] * c[m][a][e] + c[d][a][m] * c[m][b][e];
            worst = std::max(worst, std::abs(s));
          }
    return worst;
  }

  double max_entry_diff(const StructureConstants& o) const {
    double worst = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int k = 0; k < 6; ++k) worst = std::max(worst, std::abs(c[a][b][k] - o.c[a][b][k]));
    return worst;
  }
};

/// Least-squares structure constants over a matrix sextet. Throws if some
/// bracket leaves the span (closure failure), reporting the residual.
inline StructureConstants structure_constants(const std::array<Mat, 6>& basis,
                                              double closure_tol = 1e-10) {
  const Eigen::Index sz = basis[0].size();
  Eigen::MatrixXcd bm(sz, 6);
  for (int i = 0; i < 6; ++i) bm.col(i) = cplx(0, 1) * Eigen::Map<const Vec>(basis[i].data(), sz);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(bm);
  StructureConstants out;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      Mat br = bracket(basis[a], basis[b]);
      Vec rhs = Eigen::Map<const Vec>(br.data(), sz);
      Vec coef = qr.solve(rhs);
      double res = (bm * coef - rhs).cwiseAbs().maxCoeff();
      double imag = coef.imag().cwiseAbs().maxCoeff();
      out.closure_residual = std::max({out.closure_residual, res, imag});
      for (int k = 0; k < 6; ++k) out.c[a][b][k] = coef(k).real();
    }
  if (out.closure_residual > closure_tol)
    throw std::domain_error("structure_constants: basis does not close, residual " +
                            fmt17(out.closure_residual));
  return out;
}

/// The clean epsilon-pattern tensor both joint sextets reproduce:
/// [J_i,J_j] = i eps_ijk J_k, [J_i,K_j] = i eps_ijk K_k, [K_i,K_j] = i eps_ijk J_k.
inline StructureConstants reference_tensor() {
  auto eps = [](int i, int j, int k) -> double {
    return ((i - j) * (j - k) * (k - i)) / 2.0;  // Levi-Civita on 1..3
  };
  StructureConstants t;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k) {
        double e = eps(i, j, k);
        if (e == 0) continue;
        t.c[i - 1][j - 1][k - 1] = e;          // [J_i, J_j] = i e_ijk J_k
        t.c[i - 1][3 + j - 1][3 + k - 1] = e;  // [J_i, K_j] = i e_ijk K_k
        t.c[3 + i - 1][j - 1][3 + k - 1] = e;  // [K_i, J_j] = i e_ijk K_k
        t.c[3 + i - 1][3 + j - 1][k - 1] = e;  // [K_i, K_j] = i e_ijk J_k
      }
  return t;
}

/// Basis of the intersection of two real matrix spans, via the nullspace of
/// the stacked coefficient system [B1 | -B2].
inline std::vector<Mat> algebra_intersection(const std::vector<Mat>& span1,
                                             const std::vector<Mat>& span2, double eps = 1e-10) {
  if (span1.empty() || span2.empty()) return {};
  const Eigen::Index sz = span1[0].size();
  const auto n1 = static_cast<Eigen::Index>(span1.size());
  const auto n2 = static_cast<Eigen::Index>(span2.size());
  Eigen::MatrixXd stacked(2 * sz, n1 + n2);
  auto fill = [&](const std::vector<Mat>& sp, Eigen::Index col0, double sign) {
    for (size_t i = 0; i < sp.size(); ++i) {
      Eigen::Map<const Vec> v(sp[i].data(), sz);
      stacked.col(col0 + static_cast<Eigen::Index>(i)) << sign * v.real(), sign * v.imag();
    }
  };
  fill(span1, 0, 1.0);
  fill(span2, n1, -1.0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  std::vector<Mat> out;
  for (Eigen::Index i = 0; i < svd.matrixV().cols(); ++i) {
    double s = (i < sv.size()) ? sv(i) : 0.0;
    if (top != 0.0 && s > eps * top) continue;
    Mat x = Mat::Zero(span1[0].rows(), span1[0].cols());
    for (Eigen::Index a = 0; a < n1; ++a) x += svd.matrixV()(a, i) * span1[a];
    if (max_abs(x) > eps) out.push_back(x / std::sqrt(x.squaredNorm()));
  }
  return out;
}

inline double span_distance(const Mat& x, const std::vector<Mat>& span) {
  const Eigen::Index sz = x.size();
  Eigen::MatrixXcd bm(sz, static_cast<Eigen::Index>(span.size()));
  for (size_t i = 0; i < span.size(); ++i)
    bm.col(static_cast<Eigen::Index>(i)) = Eigen::Map<const Vec>(span[i].data(), sz);
  Vec rhs = Eigen::Map<const Vec>(x.data(), sz);
  Vec coef = bm.colPivHouseholderQr().solve(rhs);
  return (bm * coef - rhs).norm();
}

// ---- symmetric-space machinery on the su4 joint basis ----

/// Invariant inner product; the scale is fixed once so the K-basis is
/// orthonormal (<K3,K3> = 1).
inline double metric_inner(const Mat& a, const Mat& b) {
  static const double c = [] {
    Mat k3 = joint_basis(Rep::su4)[5];
    return 1.0 / (k3 * k3.adjoint()).trace().real();
  }();
  return c * (a * b.adjoint()).trace().real();
}

inline void require_in_k(const Mat& x, const char* who, double eps = 1e-8) {
  auto b = joint_basis(Rep::su4);
  if (span_distance(x, {b[3], b[4], b[5]}) > eps * (1 + max_abs(x)))
    throw std::invalid_argument(std::string(who) + ": input outside span(k)");
}

/// Curvature operator of the quotient. The -[[X,Y],Z] formula is stated for
/// the real (anti-Hermitian) algebra; on Hermitian generators carrying the
/// exp(iX) convention the same operator reads +[[X,Y],Z].
inline Mat curvature(const Mat& x, const Mat& y, const Mat& z) {
  require_in_k(x, "curvature");
  require_in_k(y, "curvature");
  require_in_k(z, "curvature");
  return bracket(bracket(x, y), z);
}

inline double sectional_curvature(const Mat& x, const Mat& y) {
  require_in_k(x, "sectional_curvature");
  require_in_k(y, "sectional_curvature");
  double gram = metric_inner(x, x) * metric_inner(y, y) - std::pow(metric_inner(x, y), 2);
  if (gram < 1e-14) throw std::invalid_argument("sectional_curvature: inputs dependent");
  return metric_inner(curvature(x, y, y), x) / gram;
}

/// Cartan conditions [j,k] in span(k), [k,k] in span(j), and the involution
/// theta(J+K) = J-K acting as a bracket automorphism.
inline CheckReport cartan_decomposition_check() {
  auto b = joint_basis(Rep::su4);
  std::vector<Mat> js = {b[0], b[1], b[2]}, ks = {b[3], b[4], b[5]};
  double worst = 0;
  for (const auto& j : js)
    for (const auto& k : ks) worst = std::max(worst, span_distance(bracket(j, k), ks));
  for (const auto& k1 : ks)
    for (const auto& k2 : ks) worst = std::max(worst, span_distance(bracket(k1, k2), js));
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c) {
      double sa = a < 3 ? 1.0 : -1.0, sc = c < 3 ? 1.0 : -1.0;
      Mat lhs = bracket(sa * b[a], sc * b[c]);
      // [j,j] and [k,k] land in j (theta-fixed), [j,k] lands in k (flipped)
      double flip = ((a < 3) != (c < 3)) ? -1.0 : 1.0;
      worst = std::max(worst, max_abs(lhs - flip * bracket(b[a], b[c])));
    }
  return CheckReport::make("liealg/cartan-conditions", worst, 1e-10);
}

// ---- covering map ----

struct CoveringResult {
  double sign_flip_t = -1.0;  // first walked t with su4 at -I while so6 at I
  double hom_residual = 0;    // Xi(uv) vs Xi(u)Xi(v) on small factors
};

/// Walks exp(itX) in both representations, verifies the homomorphism property
/// on small-step factors via the near-identity logarithm, and locates the
/// two-to-one witness along the path.
inline CoveringResult covering_check(const AlgebraElement& x, double t_max, int n_steps) {
  AlgebraElement xs = x;
  xs.rep = Rep::su4;
  Mat m4 = realize(xs);
  Mat m6 = realize(iso_map(xs));
  const cplx i(0, 1);
  CoveringResult out;
  for (int s = 0; s <= n_steps; ++s) {
    double t = t_max * s / n_steps;
    Mat u = expm(i * t * m4), g = expm(i * t * m6);
    if (out.sign_flip_t < 0 && t > 0 && max_abs(u + Mat::Identity(4, 4)) < 1e-6 &&
        max_abs(g - Mat::Identity(6, 6)) < 1e-6)
      out.sign_flip_t = t;
  }
  auto b4 = joint_basis(Rep::su4);
  auto b6 = joint_basis(Rep::so6);
  Eigen::MatrixXcd bm(16, 6);
  for (int a = 0; a < 6; ++a) bm.col(a) = Eigen::Map<const Vec>(b4[a].data(), 16);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(bm);
  auto xi = [&](const Mat& u) {
    Mat lg = logm_near_identity(u);
    Vec coef = qr.solve(Eigen::Map<const Vec>(lg.data(), 16));
    Mat y = Mat::Zero(6, 6);
    for (int a = 0; a < 6; ++a) y += coef(a) * b6[a];
    return expm(y);
  };
  Rng rng(271828);
  double dt = std::min(0.05, t_max / std::max(1, n_steps));
  for (int trial = 0; trial < 8; ++trial) {
    Mat a = Mat::Zero(4, 4), b = Mat::Zero(4, 4);
    for (int k = 0; k < 6; ++k) {
      a += rng.uniform(-1, 1) * b4[k];
      b += rng.uniform(-1, 1) * b4[k];
    }
    Mat u = expm(i * dt * a), v = expm(i * dt * b);
    out.hom_residual = std::max(out.hom_residual, max_abs(xi(u * v) - xi(u) * xi(v)));
  }
  return out;
}

/// Two-to-one witness numbers along the J3 path: su4 element at -I and so6 at
/// I for t = 2pi, both at I for t = 4pi.
inline double covering_witness_residual() {
  AlgebraElement j3;
  j3.coeffs(2) = 1.0;
  j3.rep = Rep::su4;
  Mat m4 = realize(j3), m6 = realize(iso_map(j3));
  const cplx i(0, 1);
  double worst = 0;
  worst = std::max(worst, max_abs(expm(i * (2 * M_PI) * m4) + Mat::Identity(4, 4)));
  worst = std::max(worst, max_abs(expm(i * (2 * M_PI) * m6) - Mat::Identity(6, 6)));
  worst = std::max(worst, max_abs(expm(i * (4 * M_PI) * m4) - Mat::Identity(4, 4)));
  worst = std::max(worst, max_abs(expm(i * (4 * M_PI) * m6) - Mat::Identity(6, 6)));
  return worst;
}

// ---- unitary conversion: the wedge-square transport su(4) -> so(6) ----

namespace detail {

inline const std::array<std::pair<int, int>, 6>& wedge_pairs() {
  static const std::array<std::pair<int, int>, 6> p = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  return p;
}

}  // namespace detail

/// Action of a Hermitian 4x4 on wedge-squared C^4 in the orthonormal pair
/// basis; a Lie algebra homomorphism onto the so(6) realization.
inline Mat wedge_square_action(const Mat& x) {
  const auto& pairs = detail::wedge_pairs();
  Mat r = Mat::Zero(6, 6);
  for (int bcol = 0; bcol < 6; ++bcol) {
    auto [k, l] = pairs[bcol];
    for (int a = 0; a < 6; ++a) {
      auto [ii, jj] = pairs[a];
      cplx c = 0;
      for (int m = 0; m < 4; ++m) {
        if (m == ii && l == jj) c += x(m, k);
        if (l == ii && m == jj) c -= x(m, k);
        if (k == ii && m == jj) c += x(m, l);
        if (m == ii && k == jj) c -= x(m, l);
      }
      r(a, bcol) = c;
    }
  }
  return r;
}

/// Verifies that the wedge-square transport is a bracket homomorphism and
/// that the transported joint sextet reproduces the su4 tensor.
inline CheckReport unitary_conversion_check() {
  auto b4 = joint_basis(Rep::su4);
  double worst = 0;
  for (int a = 0; a < 6; ++a)
    for (int c = 0; c < 6; ++c)
      worst = std::max(worst, max_abs(bracket(wedge_square_action(b4[a]), wedge_square_action(b4[c])) -
                                      wedge_square_action(bracket(b4[a], b4[c]))));
  std::array<Mat, 6> image;
  for (int a = 0; a < 6; ++a) image[a] = wedge_square_action(b4[a]);
  auto t_img = structure_constants(image);
  auto t_su4 = structure_constants(b4);
  worst = std::max(worst, t_img.max_entry_diff(t_su4));
  return CheckReport::make("liealg/unitary-conversion", worst, 1e-10);
}

// ---- intersection with the spin group image (sigma^{mu nu} machinery) ----

inline Mat sigma_munu(const GammaSet& g, int mu, int nu) {
  return cplx(0, 0.25) * bracket(g[mu], g[nu]);
}

inline double nonunitarity(const Mat& u) {
  return max_abs(u.adjoint() * u - Mat::Identity(u.rows(), u.cols()));
}

/// (a) rotation sigmas span the same real space as the joint J's, (b) their
/// exponentials are unitary, (c) boost-sigma exponentials are not, and (d)
/// conjugation by UG elements preserves the non-unitarity.
inline CheckReport spin_membership_check() {
  GammaSet g = gamma_set();
  auto b = joint_basis(Rep::su4);
  std::vector<Mat> jspan = {b[0], b[1], b[2]};
  std::vector<Mat> rot = {sigma_munu(g, 1, 2), sigma_munu(g, 2, 3), sigma_munu(g, 3, 1)};
  const cplx i(0, 1);
  double worst = 0;
  for (const auto& s : rot) worst = std::max(worst, span_distance(s, jspan));
  for (const auto& j : jspan) worst = std::max(worst, span_distance(j, rot));
  for (const auto& s : rot)
    for (double th : {0.1, 1.0, 3.0}) worst = std::max(worst, nonunitarity(expm(i * th * s)));
  double margin = 0;  // threshold checks: want nonunitarity > 0.1
  for (int k = 1; k <= 3; ++k) {
    Mat boost = expm(i * sigma_munu(g, 0, k));
    margin = std::max(margin, std::max(0.0, 0.1 - nonunitarity(boost)));
  }
  Mat u = expm(i * b[5]);  // exp(i K3) in UG
  Mat conj = u * expm(i * sigma_munu(g, 0, 3)) * u.adjoint();
  margin = std::max(margin, std::max(0.0, 0.1 - nonunitarity(conj)));
  return CheckReport::make("liealg/spin-membership", std::max(worst, margin), 1e-10, {},
                           "rotation sigmas lie in span(J); boost exponentials stay non-unitary "
                           "under UG conjugation");
}

}  // namespace spinlab::liealg
