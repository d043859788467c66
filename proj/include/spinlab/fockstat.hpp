#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinlab/matrix.hpp"
#include "spinlab/report.hpp"

namespace spinlab::fockstat {

struct ModeIndex {
  int l;       // spin label, 1 or 2
  int s_slot;  // index into the impulse grid
};

struct ImpulsePoint {
  double s0, s3;
};

/// Ladder operators on a 2^n fermionic Fock space with the antiparticle
/// identification D = (-1)^l B^H. Entries are exact 0/+-1.
struct FockOperators {
  int n_modes = 0;
  std::vector<ModeIndex> modes;
  std::vector<Mat> B;
  std::vector<Mat> D;
  Vec vacuum;

  Eigen::Index dim() const { return Eigen::Index(1) << n_modes; }
};

/// Jordan-Wigner strings: B_j = Z^(j) x lower x I^(n-j-1), with the parity
/// factor Z = diag(1,-1) on every mode left of j.
inline FockOperators build_fock(int n_modes, double mass, const std::vector<ImpulsePoint>& grid,
                                double shell_eps = 1e-10) {
  if (n_modes < 1 || n_modes > 6) throw std::invalid_argument("build_fock: 1 <= n_modes <= 6");
  for (const auto& p : grid)
    if (std::abs(p.s0 * p.s0 - p.s3 * p.s3 - mass * mass) > shell_eps)
      throw std::domain_error("build_fock: grid point off the mass shell");
  if (static_cast<int>(grid.size()) * 2 < n_modes)
    throw std::invalid_argument("build_fock: grid too small for the requested mode count");
  FockOperators ops;
  ops.n_modes = n_modes;
  for (int s = 0; s < static_cast<int>(grid.size()) && static_cast<int>(ops.modes.size()) < n_modes;
       ++s)
    for (int l = 1; l <= 2 && static_cast<int>(ops.modes.size()) < n_modes; ++l)
      ops.modes.push_back({l, s});
  const Eigen::Index dim = ops.dim();
  ops.vacuum = Vec::Zero(dim);
  ops.vacuum(0) = 1.0;
  Mat z(2, 2), lower(2, 2), id2(2, 2);
  z << 1, 0, 0, -1;
  lower << 0, 1, 0, 0;
  id2 << 1, 0, 0, 1;
  auto kron = [](const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  for (int j = 0; j < n_modes; ++j) {
    Mat m(1, 1);
    m << 1;
    for (int k = 0; k < n_modes; ++k) m = kron(m, k < j ? z : (k == j ? lower : id2));
    ops.B.push_back(m);
    ops.D.push_back((ops.modes[j].l % 2 == 1 ? -1.0 : 1.0) * m.adjoint());
  }
  return ops;
}

inline Mat anticomm(const Mat& a, const Mat& b) { return a * b + b * a; }

/// Largest deviation across the canonical anticommutation relations:
/// {B_i, B_j^H} = delta_ij I, {B_i, B_j} = 0.
inline double car_residual(const FockOperators& ops) {
  double worst = 0;
  const Mat id = Mat::Identity(ops.dim(), ops.dim());
  for (int i = 0; i < ops.n_modes; ++i)
    for (int j = 0; j < ops.n_modes; ++j) {
      Mat want = (i == j) ? id : Mat(Mat::Zero(ops.dim(), ops.dim()));
      worst = std::max(worst, max_abs(anticomm(ops.B[i], Mat(ops.B[j].adjoint())) - want));
      worst = std::max(worst, max_abs(anticomm(ops.B[i], ops.B[j])));
    }
  return worst;
}

/// The identification chain {D_i^H, B_j} = (-1)^{l_i} {B_i, B_j} = {B_i, D_j^H}
/// and its adjoint counterpart, plus {B,B} = {D,D} = 0 for every pair.
inline CheckReport anticommutator_suite(const FockOperators& ops) {
  double worst = 0;
  for (int i = 0; i < ops.n_modes; ++i)
    for (int j = 0; j < ops.n_modes; ++j) {
      double sig_i = ops.modes[i].l % 2 == 1 ? -1.0 : 1.0;
      double sig_j = ops.modes[j].l % 2 == 1 ? -1.0 : 1.0;
      Mat bh_i = ops.B[i].adjoint(), bh_j = ops.B[j].adjoint();
      Mat bb = anticomm(ops.B[i], ops.B[j]);
      Mat dd = anticomm(ops.D[i], ops.D[j]);
      worst = std::max(worst, max_abs(anticomm(Mat(ops.D[i].adjoint()), ops.B[j]) - sig_i * bb));
      worst = std::max(worst, max_abs(anticomm(ops.B[i], Mat(ops.D[j].adjoint())) - sig_j * bb));
      worst = std::max(worst, max_abs(anticomm(bh_i, ops.D[j]) - sig_i * dd));
      worst = std::max(worst, max_abs(anticomm(ops.D[i], bh_j) - sig_j * dd));
      worst = std::max(worst, max_abs(bb));
      worst = std::max(worst, max_abs(dd));
      worst = std::max(worst, max_abs(Mat(ops.B[i] * ops.B[i])));
      worst = std::max(worst, max_abs(Mat(bh_i * bh_i)));
    }
  return CheckReport::make("fockstat/anticommutator-chain", worst, 0.0,
                           {{"n_modes", std::to_string(ops.n_modes)}},
                           "identification signs resolved per mode spin label");
}

/// Double creation annihilates; single and distinct-pair occupations are unit.
inline CheckReport exclusion_check(const FockOperators& ops) {
  double worst = 0;
  for (int i = 0; i < ops.n_modes; ++i) {
    Vec one = ops.B[i].adjoint() * ops.vacuum;
    worst = std::max(worst, std::abs(one.norm() - 1.0));
    worst = std::max(worst, (ops.B[i].adjoint() * one).norm());
    worst = std::max(worst, (ops.B[i] * ops.vacuum).norm());
    for (int j = 0; j < ops.n_modes; ++j) {
      if (i == j) continue;
      worst = std::max(worst, std::abs((ops.B[j].adjoint() * one).norm() - 1.0));
    }
  }
  return CheckReport::make("fockstat/exclusion", worst, 0.0,
                           {{"n_modes", std::to_string(ops.n_modes)}});
}

}  // namespace spinlab::fockstat
