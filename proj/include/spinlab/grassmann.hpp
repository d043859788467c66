#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "spinlab/report.hpp"
#include "spinlab/rng.hpp"

namespace spinlab::grassmann {

// Ambient coordinates are ordered (x1, x2, x3, t3, t2, t1); a 3-plane is the
// row span of a rank-3 3x6 frame and is encoded by its 20 ordered minors.

using FrameMatrix = Eigen::Matrix<double, 3, 6>;
using PluckerVec = Eigen::Matrix<double, 20, 1>;

struct IndexTriple {
  int i0, i1, i2;
  bool operator==(const IndexTriple&) const = default;
  auto operator<=>(const IndexTriple&) const = default;
};

/// The 20 canonical triples {i0<i1<i2} of {0..5} in lexicographic order.
inline const std::array<IndexTriple, 20>& canonical_triples() {
  static const std::array<IndexTriple, 20> t = [] {
    std::array<IndexTriple, 20> out{};
    int n = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c) out[n++] = {a, b, c};
    return out;
  }();
  return t;
}

inline int triple_index(const IndexTriple& t) {
  const auto& all = canonical_triples();
  for (int i = 0; i < 20; ++i)
    if (all[i] == t) return i;
  throw std::invalid_argument("triple_index: not a canonical triple");
}

/// Signed coordinate for an arbitrary index triple (0 for repeated indices).
inline double signed_coord(const PluckerVec& p, int i, int j, int k) {
  if (i == j || j == k || i == k) return 0.0;
  int idx[3] = {i, j, k};
  int sign = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (idx[a] > idx[b]) {
        std::swap(idx[a], idx[b]);
        sign = -sign;
      }
  return sign * p(triple_index({idx[0], idx[1], idx[2]}));
}

struct PluckerPoint {
  PluckerVec coords = PluckerVec::Zero();

  double norm() const { return coords.norm(); }

  /// Representative on the unit 19-sphere; Gr+ identifies positive multiples
  /// only, so no sign is stripped.
  PluckerVec normalized() const {
    double n = norm();
    if (n == 0) throw std::domain_error("PluckerPoint: all coordinates zero");
    return coords / n;
  }
};

enum class Orientation { right, left };  // right = real frames, left = virtual

struct BoostCurveSpec {
  int k = 1;  // direction 1..3
  Orientation orientation = Orientation::right;
  double alpha = 0.0;  // [0, pi/4)
};

/// Boost parameter from a velocity-like derivative, alpha in [0, pi/4).
inline double alpha_from_velocity(double v, Orientation /*orientation*/ = Orientation::right) {
  if (v < 0.0 || v >= 1.0) throw std::domain_error("alpha_from_velocity: need 0 <= v < 1");
  return std::atan(std::tanh(v / std::sqrt(1.0 - v * v)));
}

/// The curve's 6x6 transformation: a cos4a/sin4a block in the (x^k, t^3)
/// plane, with the sign pattern negated for the left (virtual) family.
inline Eigen::Matrix<double, 6, 6> boost_matrix(const BoostCurveSpec& spec) {
  if (spec.k < 1 || spec.k > 3) throw std::invalid_argument("boost_matrix: k must be 1..3");
  Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Identity();
  const int i = spec.k - 1;
  const double c = std::cos(4 * spec.alpha), s = std::sin(4 * spec.alpha);
  if (spec.orientation == Orientation::right) {
    m(i, i) = c;
    m(i, 3) = s;
    m(3, i) = -s;
    m(3, 3) = c;
  } else {
    m(i, i) = -c;
    m(i, 3) = -s;
    m(3, i) = s;
    m(3, 3) = -c;
  }
  return m;
}

inline FrameMatrix standard_frame() {
  FrameMatrix f = FrameMatrix::Zero();
  f(0, 0) = f(1, 1) = f(2, 2) = 1.0;
  return f;
}

/// First three rows of the curve's 6x6 matrix (the transformed standard frame).
inline FrameMatrix boost_frame(const BoostCurveSpec& spec) {
  return boost_matrix(spec).topRows<3>();
}

inline double det3(const Eigen::Matrix3d& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

/// The 20 ordered 3x3 minors of a rank-3 frame.
inline PluckerPoint plucker_map(const FrameMatrix& f) {
  PluckerPoint p;
  const auto& trips = canonical_triples();
  for (int i = 0; i < 20; ++i) {
    Eigen::Matrix3d m;
    m.col(0) = f.col(trips[i].i0);
    m.col(1) = f.col(trips[i].i1);
    m.col(2) = f.col(trips[i].i2);
    p.coords(i) = det3(m);
  }
  if (p.norm() < 1e-12) throw std::domain_error("plucker_map: degenerate frame (rank < 3)");
  return p;
}

/// Quadratic relation F_{i0 i1 j0 j1 j2 j3}(P).
inline double plucker_relation(const PluckerPoint& p, int i0, int i1, int j0, int j1, int j2,
                               int j3) {
  auto in_range = [](int v) { return v >= 0 && v <= 5; };
  if (!in_range(i0) || !in_range(i1) || !in_range(j0) || !in_range(j1) || !in_range(j2) ||
      !in_range(j3))
    throw std::invalid_argument("plucker_relation: index out of range");
  if (i0 == i1 || j0 == j1 || j0 == j2 || j0 == j3 || j1 == j2 || j1 == j3 || j2 == j3)
    throw std::invalid_argument("plucker_relation: repeated index within a group");
  const int js[4] = {j0, j1, j2, j3};
  double total = 0.0;
  for (int lam = 0; lam < 4; ++lam) {
    int rest[3];
    int n = 0;
    for (int a = 0; a < 4; ++a)
      if (a != lam) rest[n++] = js[a];
    double sign = (lam % 2 == 0) ? 1.0 : -1.0;
    total += sign * signed_coord(p.coords, i0, i1, js[lam]) *
             signed_coord(p.coords, rest[0], rest[1], rest[2]);
  }
  return total;
}

/// Largest |F| over every canonical index choice (15 pairs x 15 quadruples).
inline double max_relation_residual(const PluckerPoint& p) {
  double worst = 0.0;
  for (int i0 = 0; i0 < 6; ++i0)
    for (int i1 = i0 + 1; i1 < 6; ++i1)
      for (int j0 = 0; j0 < 6; ++j0)
        for (int j1 = j0 + 1; j1 < 6; ++j1)
          for (int j2 = j1 + 1; j2 < 6; ++j2)
            for (int j3 = j2 + 1; j3 < 6; ++j3)
              worst = std::max(worst, std::abs(plucker_relation(p, i0, i1, j0, j1, j2, j3)));
  return worst;
}

/// Affine chart around a nonvanishing anchor coordinate.
inline std::map<IndexTriple, double> chart_coords(const PluckerPoint& p, const IndexTriple& anchor,
                                                  double eps = 1e-12) {
  double denom = p.coords(triple_index(anchor));
  if (std::abs(denom) <= eps * p.norm())
    throw std::domain_error("chart_coords: point outside the anchor chart");
  std::map<IndexTriple, double> z;
  for (const auto& t : canonical_triples())
    if (!(t == anchor)) z[t] = p.coords(triple_index(t)) / denom;
  return z;
}

/// Central finite-difference tangent of the chart coordinates along alpha.
inline std::map<IndexTriple, double> curve_tangent(const BoostCurveSpec& spec,
                                                   const IndexTriple& anchor, double h) {
  BoostCurveSpec plus = spec, minus = spec;
  plus.alpha += h;
  minus.alpha -= h;
  auto zp = chart_coords(plucker_map(boost_frame(plus)), anchor);
  auto zm = chart_coords(plucker_map(boost_frame(minus)), anchor);
  std::map<IndexTriple, double> dz;
  for (const auto& [t, v] : zp) dz[t] = (v - zm.at(t)) / (2 * h);
  return dz;
}

inline PluckerPoint point_p0() {
  PluckerPoint p;
  p.coords(0) = 1.0;
  return p;
}

inline PluckerPoint point_pinf() {
  PluckerPoint p;
  p.coords(0) = -1.0;
  return p;
}

struct CurveLimit {
  PluckerPoint limit;        // snapped to P0 or Pinf
  double approach_residual;  // distance of the evaluated point to the limit
  double richardson;         // stability of the limit under step halving
};

/// Numerical limit of the curve as alpha -> pi/4, confirmed by step halving.
/// The right family ends at Pinf, the left at P0.
inline CurveLimit curve_limit(int k, Orientation orientation, double offset = 1e-6) {
  auto eval = [&](double off) {
    BoostCurveSpec s{k, orientation, M_PI / 4 - off};
    return plucker_map(boost_frame(s)).normalized();
  };
  PluckerVec a = eval(offset), b = eval(offset / 2);
  // Richardson extrapolation of the linear-in-offset error.
  PluckerVec extrap = 2 * b - a;
  PluckerVec p0 = point_p0().coords, pinf = point_pinf().coords;
  double d0 = (extrap - p0).norm(), dinf = (extrap - pinf).norm();
  CurveLimit out;
  out.limit = (d0 < dinf) ? point_p0() : point_pinf();
  out.approach_residual = (a - out.limit.coords).norm();
  out.richardson = std::min(d0, dinf);
  return out;
}

/// Spatial rotation diag(R, I3) applied to the plane.
inline FrameMatrix rotate_frame(const Eigen::Matrix3d& r, const FrameMatrix& f, double eps = 1e-10) {
  if ((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > eps ||
      r.determinant() < 0.0)
    throw std::invalid_argument("rotate_frame: not a proper rotation");
  Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Identity();
  m.topLeftCorner<3, 3>() = r;
  return f * m.transpose();
}

/// Samples both rotated curve families and reports the minimum chordal
/// distance between them after cutting 1e-3 neighborhoods of P0 and Pinf.
/// pass means the minimum exceeds 1e-3.
inline CheckReport intersection_probe(int n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("intersection_probe: need n_samples >= 1");
  Rng rng(seed);
  const double cut = 1e-3;
  PluckerVec p0 = point_p0().coords, pinf = point_pinf().coords;
  auto sample = [&](Orientation o) {
    std::vector<PluckerVec> pts;
    pts.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
      BoostCurveSpec spec{rng.uniform_int(1, 3), o, rng.uniform(0.0, M_PI / 4)};
      FrameMatrix f = rotate_frame(rng.rotation(), boost_frame(spec));
      PluckerVec p = plucker_map(f).normalized();
      if ((p - p0).norm() > cut && (p - pinf).norm() > cut) pts.push_back(p);
    }
    return pts;
  };
  auto right = sample(Orientation::right);
  auto left = sample(Orientation::left);
  double best2 = std::numeric_limits<double>::max();
  for (const auto& a : right)
    for (const auto& b : left) best2 = std::min(best2, (a - b).squaredNorm());
  double min_dist = std::sqrt(best2);
  CheckReport r = CheckReport::make(
      "grassmann/intersection-probe", std::max(0.0, cut - min_dist), 0.0,
      {{"n_samples", std::to_string(n_samples)}, {"seed", std::to_string(seed)}},
      "min cross-family distance " + fmt17(min_dist) +
          "; the rotated families share points away from the poles, so the minimum shrinks with "
          "sample count");
  return r;
}

}  // namespace spinlab::grassmann
