#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace spinlab {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

/// Absolute and rank thresholds shared by every numeric check.
struct Tolerance {
  double abs_eps = 1e-10;
  double rank_eps = 1e-8;
};

inline bool all_finite(const Mat& m) {
  return m.allFinite();
}

inline void require_square(const Mat& m, const char* who) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

inline double max_abs(const Mat& m) {
  return m.cwiseAbs().maxCoeff();
}

/// Commutator AB - BA.
inline Mat bracket(const Mat& a, const Mat& b) {
  require_square(a, "bracket");
  require_square(b, "bracket");
  if (a.rows() != b.rows()) throw std::invalid_argument("bracket: dimension mismatch");
  return a * b - b * a;
}

/// Matrix exponential, scaling-and-squaring with a Taylor series of order 12.
/// Matrices here never exceed 64x64, so an inf-norm scaling to < 0.5 is enough.
inline Mat expm(const Mat& x) {
  require_square(x, "expm");
  if (!all_finite(x)) throw std::invalid_argument("expm: non-finite entries");
  const Eigen::Index n = x.rows();
  double norm = x.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm > 0.5 && squarings < 60) {
    norm /= 2.0;
    ++squarings;
  }
  Mat xs = x / std::pow(2.0, squarings);
  Mat result = Mat::Identity(n, n);
  Mat term = Mat::Identity(n, n);
  for (int k = 1; k <= 12; ++k) {
    term = (term * xs) / static_cast<double>(k);
    result += term;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

namespace detail {

/// Principal square root by the Denman-Beavers iteration; fine for the
/// well-conditioned near-identity inputs logm feeds it.
inline Mat sqrtm_db(const Mat& a) {
  Mat y = a;
  Mat z = Mat::Identity(a.rows(), a.cols());
  for (int it = 0; it < 60; ++it) {
    Mat yi = y.inverse();
    Mat zi = z.inverse();
    Mat yn = 0.5 * (y + zi);
    Mat zn = 0.5 * (z + yi);
    double delta = max_abs(yn - y);
    y = yn;
    z = zn;
    if (delta < 1e-15) break;
  }
  return y;
}

inline double op_norm(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

}  // namespace detail

/// Inverse scaling-and-squaring logarithm for matrices near the identity.
/// Requires ||U - I|| < 1 in operator norm.
inline Mat logm_near_identity(const Mat& u) {
  require_square(u, "logm_near_identity");
  const Eigen::Index n = u.rows();
  Mat id = Mat::Identity(n, n);
  if (detail::op_norm(u - id) >= 1.0)
    throw std::domain_error("logm_near_identity: input too far from identity");
  Mat v = u;
  int k = 0;
  while (max_abs(v - id) > 0.25 && k < 40) {
    v = detail::sqrtm_db(v);
    ++k;
  }
  Mat e = v - id;
  Mat term = e;
  Mat log_v = Mat::Zero(n, n);
  for (int j = 1; j <= 24; ++j) {
    log_v += term * ((j % 2 == 1 ? 1.0 : -1.0) / j);
    term = term * e;
  }
  return std::pow(2.0, k) * log_v;
}

/// Number of singular values above rank_eps times the largest.
inline int rank(const Mat& m, const Tolerance& tol = {}) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  if (top == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol.rank_eps * top) ++r;
  return r;
}

/// Orthonormal basis of the numerical kernel (columns of V past the rank).
inline std::vector<Vec> nullspace(const Mat& m, const Tolerance& tol = {}) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  std::vector<Vec> basis;
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    double s = (i < sv.size()) ? sv(i) : 0.0;
    if (top == 0.0 || s <= tol.rank_eps * top) basis.push_back(svd.matrixV().col(i));
  }
  return basis;
}

}  // namespace spinlab
