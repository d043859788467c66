#pragma once

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinlab/gamma.hpp"
#include "spinlab/matrix.hpp"
#include "spinlab/report.hpp"

namespace spinlab::superspin {

using Vec4c = Eigen::Vector4cd;

// The epsilon block is stored as E(row = upper index nu in {0, mu_l},
// col = lower index mu): E(0,0)=e^0_0, E(0,1)=e^0_3, E(1,0)=e^3_0, E(1,1)=e^3_3.

struct DeformedMetric {
  double alpha = 0.0;
  int mu_l = 3;
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();

  Eigen::Matrix2d active_block() const {
    Eigen::Matrix2d b;
    b << g(0, 0), g(0, mu_l), g(mu_l, 0), g(mu_l, mu_l);
    return b;
  }
};

inline DeformedMetric deformed_metric(double alpha, int mu_l = 3) {
  if (mu_l < 1 || mu_l > 3) throw std::invalid_argument("deformed_metric: mu_l must be 1..3");
  DeformedMetric m;
  m.alpha = alpha;
  m.mu_l = mu_l;
  m.g.diagonal() << std::cos(alpha), -1, -1, -1;
  m.g(mu_l, mu_l) = -std::cos(alpha);
  m.g(0, mu_l) = m.g(mu_l, 0) = std::sin(alpha);
  return m;
}

/// Continuous solution of E G(alpha) E^T = eta2 with E(0) = I: the rotation by
/// -alpha/2. Other solutions differ by O(1,1) factors; the tabulated endpoint
/// sets at pi and 3pi/2 live on other components and are validated separately.
inline Eigen::Matrix2d solve_epsilon(double alpha) {
  double c = std::cos(alpha / 2), s = std::sin(alpha / 2);
  Eigen::Matrix2d e;
  e << c, s, -s, c;
  return e;
}

/// The four endpoint value sets (alpha = 0, pi/2, pi, 3pi/2).
inline const std::array<std::pair<double, Eigen::Matrix2d>, 4>& epsilon_endpoint_table() {
  static const auto table = [] {
    std::array<std::pair<double, Eigen::Matrix2d>, 4> t;
    double r = std::sqrt(2.0) / 2;
    t[0] = {0.0, (Eigen::Matrix2d() << 1, 0, 0, 1).finished()};
    t[1] = {M_PI / 2, (Eigen::Matrix2d() << r, r, -r, r).finished()};
    t[2] = {M_PI, (Eigen::Matrix2d() << 0, -1, -1, 0).finished()};
    t[3] = {3 * M_PI / 2, (Eigen::Matrix2d() << r, -r, r, r).finished()};
    return t;
  }();
  return table;
}

inline Eigen::Matrix2d metric_block(double alpha) {
  Eigen::Matrix2d g;
  g << std::cos(alpha), std::sin(alpha), std::sin(alpha), -std::cos(alpha);
  return g;
}

/// Residuals of the two normalization constraints and the split torsion pair
/// for a given epsilon block.
struct EpsilonResiduals {
  double norm_time;     // (e^0_0^2 - e^0_3^2) cos a + 2 e^0_0 e^0_3 sin a - 1
  double norm_space;    // (e^3_0^2 - e^3_3^2) cos a + 2 e^3_0 e^3_3 sin a + 1
  double torsion_cos;   // (e^0_0 e^3_0 - e^0_3 e^3_3) cos a
  double torsion_sin;   // (e^0_0 e^3_3 + e^3_0 e^0_3) sin a
  double max_abs() const {
    return std::max({std::abs(norm_time), std::abs(norm_space), std::abs(torsion_cos),
                     std::abs(torsion_sin)});
  }
};

inline EpsilonResiduals epsilon_residuals(double alpha, const Eigen::Matrix2d& e) {
  double ca = std::cos(alpha), sa = std::sin(alpha);
  double e00 = e(0, 0), e03 = e(0, 1), e30 = e(1, 0), e33 = e(1, 1);
  EpsilonResiduals r;
  r.norm_time = (e00 * e00 - e03 * e03) * ca + 2 * e00 * e03 * sa - 1.0;
  r.norm_space = (e30 * e30 - e33 * e33) * ca + 2 * e30 * e33 * sa + 1.0;
  r.torsion_cos = (e00 * e30 - e03 * e33) * ca;
  r.torsion_sin = (e00 * e33 + e30 * e03) * sa;
  return r;
}

struct ConnectionCoefficients {
  double alpha = 0.0;
  Eigen::Matrix2d eps = Eigen::Matrix2d::Identity();
  double kappa0 = 0.0;
  double kappa3 = 0.0;
  double mass = 1.0;
  double s0 = 1.0;
  double s3 = 0.0;
};

inline double kappa_quadratic(double alpha, double k0, double k3) {
  return (k0 * k0 - k3 * k3) * std::cos(alpha) + 2 * k0 * k3 * std::sin(alpha);
}

/// epsilon_0 = e^0_0 s0 + e^3_0 s3, epsilon_3 = e^0_3 s0 + e^3_3 s3.
inline std::pair<double, double> impulse_entries(const ConnectionCoefficients& cc) {
  return {cc.eps(0, 0) * cc.s0 + cc.eps(1, 0) * cc.s3,
          cc.eps(0, 1) * cc.s0 + cc.eps(1, 1) * cc.s3};
}

/// Target of the rank constraint on the rotation branch:
/// eps0^2 - eps3^2 = m^2 cos a - 2 s0 s3 sin a.
inline double rank_constraint_target(double alpha, double m, double s0, double s3) {
  return m * m * std::cos(alpha) - 2 * s0 * s3 * std::sin(alpha);
}

/// Root of {kappa quadratic; (m+k3)^2 - k0^2 = eps0^2 - eps3^2} continued from
/// (0,0) at alpha = 0. The quadratic pins the direction phi = alpha/2 - pi/4;
/// the radius solves a scalar quadratic whose origin root is '+' before the
/// pole at alpha = pi and '-' after it; at sin(alpha) = 0 the system is linear
/// and has the single ray root. A damped Newton polish finishes the job.
inline std::pair<double, double> solve_kappa(double alpha, double m, double s0, double s3,
                                             double shell_eps = 1e-10) {
  if (std::abs(s0 * s0 - s3 * s3 - m * m) > shell_eps)
    throw std::domain_error("solve_kappa: impulse off the mass shell");
  double a = std::fmod(alpha, 2 * M_PI);
  if (a < 0) a += 2 * M_PI;
  const double phi = a / 2 - M_PI / 4;
  const double sa = std::sin(a), sp = std::sin(phi), cp = std::cos(phi);
  const double target = rank_constraint_target(a, m, s0, s3);
  const double c_lin = m * m - target;
  double r;
  if (std::abs(sa) < 1e-9) {
    r = (std::abs(sp) < 1e-12) ? 0.0 : -c_lin / (2 * m * sp);
  } else {
    double disc = m * m * sp * sp + sa * c_lin;
    if (disc < 0) throw std::runtime_error("solve_kappa: no real root on the ray (disc < 0)");
    r = (a < M_PI) ? (m * sp + std::sqrt(disc)) / sa : (m * sp - std::sqrt(disc)) / sa;
  }
  double k0 = r * cp, k3 = r * sp;
  // damped Newton polish on (f1, f2)
  for (int it = 0; it < 30; ++it) {
    double f1 = kappa_quadratic(a, k0, k3);
    double f2 = (m + k3) * (m + k3) - k0 * k0 - target;
    double err = std::hypot(f1, f2);
    if (err < 1e-13 * (1 + std::abs(target) + k0 * k0 + k3 * k3)) break;
    double ca = std::cos(a);
    Eigen::Matrix2d jac;
    jac << 2 * k0 * ca + 2 * k3 * sa, -2 * k3 * ca + 2 * k0 * sa, -2 * k0, 2 * (m + k3);
    Eigen::Vector2d step = jac.colPivHouseholderQr().solve(Eigen::Vector2d(-f1, -f2));
    double lam = 1.0;
    while (lam > 1e-8) {
      double n0 = k0 + lam * step(0), n3 = k3 + lam * step(1);
      double g1 = kappa_quadratic(a, n0, n3);
      double g2 = (m + n3) * (m + n3) - n0 * n0 - target;
      if (std::hypot(g1, g2) <= err) {
        k0 = n0;
        k3 = n3;
        break;
      }
      lam /= 2;
    }
    if (lam <= 1e-8) break;
  }
  double f1 = kappa_quadratic(a, k0, k3);
  double f2 = (m + k3) * (m + k3) - k0 * k0 - target;
  if (std::hypot(f1, f2) > 1e-8 * (1 + std::abs(target)))
    throw std::runtime_error("solve_kappa: Newton did not converge, residual " +
                             fmt17(std::hypot(f1, f2)));
  return {k0, k3};
}

/// Connection on the solved branch (rotation epsilon + continued kappa).
inline ConnectionCoefficients make_connection(double alpha, double m, double s0, double s3) {
  ConnectionCoefficients cc;
  cc.alpha = alpha;
  cc.eps = solve_epsilon(alpha);
  auto [k0, k3] = solve_kappa(alpha, m, s0, s3);
  cc.kappa0 = k0;
  cc.kappa3 = k3;
  cc.mass = m;
  cc.s0 = s0;
  cc.s3 = s3;
  return cc;
}

/// Endpoint connection (alpha in {0, pi} mod 2pi) built from the tabulated
/// branch data: the endpoint epsilon row at pi and kappa(pi) = (-m, -m).
inline ConnectionCoefficients tabulated_connection(double alpha, double m, double s0, double s3) {
  double a = std::fmod(alpha, 2 * M_PI);
  if (a < 0) a += 2 * M_PI;
  ConnectionCoefficients cc;
  cc.alpha = a;
  cc.mass = m;
  cc.s0 = s0;
  cc.s3 = s3;
  if (std::abs(a) < 1e-12 || std::abs(a - 2 * M_PI) < 1e-12) {
    cc.eps = Eigen::Matrix2d::Identity();
    cc.kappa0 = cc.kappa3 = 0.0;
  } else if (std::abs(a - M_PI) < 1e-12) {
    cc.eps = epsilon_endpoint_table()[2].second;
    cc.kappa0 = cc.kappa3 = -m;
  } else {
    throw std::domain_error("tabulated_connection: branch data only at alpha = 0 or pi");
  }
  return cc;
}

/// Residuals of the constraint system at the given coefficients: the kappa
/// quadratic, the two epsilon normalizations, the split torsion pair, and the
/// composite plane-wave identity g(al)^{nu la} sg_nu sg_la = eta^{nu la} s_nu s_la
/// with sg = E^T s (kappa terms excluded).
inline std::array<double, 6> coinvariance_residual(const ConnectionCoefficients& cc) {
  auto er = epsilon_residuals(cc.alpha, cc.eps);
  Eigen::Vector2d s(cc.s0, cc.s3);
  Eigen::Vector2d sg = cc.eps.transpose() * s;
  double wave = sg.transpose() * metric_block(cc.alpha) * sg;
  double flat = cc.s0 * cc.s0 - cc.s3 * cc.s3;
  return {kappa_quadratic(cc.alpha, cc.kappa0, cc.kappa3),
          er.norm_time,
          er.norm_space,
          er.torsion_cos,
          er.torsion_sin,
          wave - flat};
}

/// The 4x4 matrix of the deformed Dirac system for the plane-wave ansatz.
inline Mat dirac_matrix(const ConnectionCoefficients& cc) {
  auto [e0, e3] = impulse_entries(cc);
  double ma = cc.mass + cc.kappa3, k0 = cc.kappa0;
  Mat d = Mat::Zero(4, 4);
  d(0, 0) = e0 - ma;
  d(0, 2) = -e3 - k0;
  d(1, 1) = e0 - ma;
  d(1, 3) = e3 + k0;
  d(2, 0) = e3 - k0;
  d(2, 2) = -e0 - ma;
  d(3, 1) = -e3 + k0;
  d(3, 3) = -e0 - ma;
  return d;
}

enum class SpinorLabel { w1, w2, u1, u2 };

struct SpinorSolution {
  SpinorLabel label;
  Vec4c components;
  ConnectionCoefficients context;
};

inline double rank_constraint_residual(const ConnectionCoefficients& cc) {
  auto [e0, e3] = impulse_entries(cc);
  return std::abs(e0 * e0 - e3 * e3 -
                  ((cc.mass + cc.kappa3) * (cc.mass + cc.kappa3) - cc.kappa0 * cc.kappa0));
}

/// The four kernel vectors of the Dirac matrix.
inline std::array<SpinorSolution, 4> spinor_solutions(const ConnectionCoefficients& cc) {
  if (rank_constraint_residual(cc) > 1e-8 * (1 + cc.s0 * cc.s0))
    throw std::domain_error("spinor_solutions: rank constraint violated");
  auto [e0, e3] = impulse_entries(cc);
  double ma = cc.mass + cc.kappa3, k0 = cc.kappa0;
  std::array<SpinorSolution, 4> out;
  out[0] = {SpinorLabel::w1, Vec4c(e0 + ma, 0, e3 - k0, 0), cc};
  out[1] = {SpinorLabel::w2, Vec4c(0, e0 + ma, 0, -e3 + k0), cc};
  out[2] = {SpinorLabel::u1, Vec4c(e3 + k0, 0, e0 - ma, 0), cc};
  out[3] = {SpinorLabel::u2, Vec4c(0, -e3 - k0, 0, e0 - ma), cc};
  return out;
}

inline double klein_gordon_check(const ConnectionCoefficients& cc) {
  return std::abs(cc.s0 * cc.s0 - cc.s3 * cc.s3 - cc.mass * cc.mass);
}

enum class BarConvention { plain_conjugate, dirac_adjoint };

inline Vec4c bar_vector(const Vec4c& u, BarConvention conv) {
  Vec4c c = u.conjugate();
  if (conv == BarConvention::dirac_adjoint) {
    c(2) = -c(2);
    c(3) = -c(3);
  }
  return c;
}

struct SuperspinorResult {
  double residual_1;       // || w1(alpha) + ubar1(alpha+pi) ||
  double residual_2;       // || w2(alpha) - ubar2(alpha+pi) ||
  double impulse_residual; // phase vector equality between the endpoints
};

/// The particle/antiparticle exchange under alpha -> alpha + pi, with the
/// (-,+) sign pattern. Supported where the branch data exists (alpha = 0 or
/// pi mod 2pi).
inline SuperspinorResult superspinor_relation(double alpha, double m, double s0, double s3,
                                              BarConvention conv = BarConvention::plain_conjugate) {
  ConnectionCoefficients here = tabulated_connection(alpha, m, s0, s3);
  ConnectionCoefficients there = tabulated_connection(alpha + M_PI, m, s0, s3);
  auto w = spinor_solutions(here);
  auto u = spinor_solutions(there);
  SuperspinorResult r;
  r.residual_1 = (w[0].components + bar_vector(u[2].components, conv)).norm();
  r.residual_2 = (w[1].components - bar_vector(u[3].components, conv)).norm();
  r.impulse_residual = std::max(std::abs(here.s0 - there.s0), std::abs(here.s3 - there.s3));
  return r;
}

struct GaugeField {
  std::array<cplx, 4> A{};  // potentials
  double e = 1.0;           // charge
  std::array<double, 4> a{};  // linear phase slope, f(x) = a . x
};

/// 4x4 epsilon acting on derivative indices: the active 2x2 block on (0,3),
/// identity on (1,2). Row = upper index, column = lower.
inline Eigen::Matrix4d eps4(const ConnectionCoefficients& cc) {
  Eigen::Matrix4d e = Eigen::Matrix4d::Identity();
  e(0, 0) = cc.eps(0, 0);
  e(0, 3) = cc.eps(0, 1);
  e(3, 0) = cc.eps(1, 0);
  e(3, 3) = cc.eps(1, 1);
  return e;
}

inline Mat connection_k_generator(const GammaSet& g) { return -g[3]; }

/// nabla_mu applied to a plane wave w e^{-i s.x} evaluated with the phase
/// stripped: returns the matrix action on w for each mu.
inline Vec4c nabla_plane_wave(const ConnectionCoefficients& cc, const GammaSet& g, int mu,
                              const Vec4c& w, const std::array<cplx, 4>& wave_numbers) {
  Eigen::Matrix4d e = eps4(cc);
  cplx deriv = 0;
  for (int nu = 0; nu < 4; ++nu) deriv += e(nu, mu) * wave_numbers[nu];
  Vec4c out = deriv * w;
  double kap = (mu == 0) ? cc.kappa0 : (mu == 3 ? cc.kappa3 : 0.0);
  if (kap != 0.0) out += cplx(0, 1) * kap * (connection_k_generator(g) * w);
  return out;
}

struct GaugeTransformResult {
  std::array<cplx, 4> A_transformed;
  CheckReport report;
};

/// Gauge shift A~_nu = A_nu - e^{-1} eps^mu_nu a_mu and the covariance check
/// (i nabla - e A~)(e^{if} Psi) = e^{if} (i nabla - e A) Psi on plane waves.
inline GaugeTransformResult gauge_transform(const GaugeField& gf,
                                            const ConnectionCoefficients& cc) {
  GammaSet g = gamma_set();
  Eigen::Matrix4d e = eps4(cc);
  GaugeTransformResult out;
  for (int nu = 0; nu < 4; ++nu) {
    cplx shift = 0;
    for (int mu = 0; mu < 4; ++mu) shift += e(mu, nu) * gf.a[mu];
    out.A_transformed[nu] = gf.A[nu] - shift / gf.e;
  }
  // plane wave with wave numbers d_nu -> -i s_nu; the gauge phase shifts them
  // by +i a_nu.
  std::array<cplx, 4> s_orig = {cplx(0, -cc.s0), 0, 0, cplx(0, -cc.s3)};
  std::array<cplx, 4> s_shift = s_orig;
  for (int nu = 0; nu < 4; ++nu) s_shift[nu] += cplx(0, gf.a[nu]);
  Vec4c w = spinor_solutions(cc)[0].components;
  double worst = 0;
  for (int nu = 0; nu < 4; ++nu) {
    Vec4c lhs = cplx(0, 1) * nabla_plane_wave(cc, g, nu, w, s_shift) -
                gf.e * out.A_transformed[nu] * w;
    Vec4c rhs = cplx(0, 1) * nabla_plane_wave(cc, g, nu, w, s_orig) - gf.e * gf.A[nu] * w;
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  out.report = CheckReport::make("superspin/gauge-covariance", worst, 1e-10);
  return out;
}

/// (i/2)(Psi^H g^mu nabla_mu Psi - (nabla_mu Psi)^H g^mu Psi) - m Psi^H Psi
/// at x = 0 for the plane wave built from the spinor. The symmetrized
/// derivative pair is real up to roundoff, so the density is real for real
/// solution vectors; on kernel solutions it vanishes.
inline cplx lagrangian_density(const ConnectionCoefficients& cc, const SpinorSolution& spinor) {
  GammaSet g = gamma_set();
  std::array<cplx, 4> wn = {cplx(0, -cc.s0), 0, 0, cplx(0, -cc.s3)};
  const Vec4c& w = spinor.components;
  cplx total = 0;
  for (int mu = 0; mu < 4; ++mu) {
    Vec4c nw = nabla_plane_wave(cc, g, mu, w, wn);
    total += w.dot(g[mu] * nw) - nw.dot(g[mu] * w);  // Eigen dot conjugates the left factor
  }
  return cplx(0, 0.5) * total - cc.mass * w.squaredNorm();
}

}  // namespace spinlab::superspin
