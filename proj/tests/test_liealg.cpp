#include <catch2/catch_amalgamated.hpp>

#include "spinlab/liealg.hpp"

using namespace spinlab;
using namespace spinlab::liealg;

namespace {
const cplx I(0, 1);
}

TEST_CASE("so6 generator displays") {
  Mat k1 = so6_generator({'K', 1, Side::right});
  REQUIRE(k1(0, 3) == I);
  REQUIRE(k1(3, 0) == -I);
  REQUIRE(max_abs(k1) == 1.0);

  Mat kl2 = so6_generator({'K', 2, Side::left});
  REQUIRE(kl2(2, 4) == I);
  REQUIRE(kl2(4, 2) == -I);

  REQUIRE(max_abs(so6_generator({'K', 3, Side::left}) - so6_generator({'K', 3, Side::right})) ==
          0.0);
  REQUIRE_THROWS_AS(so6_generator({'J', 1, Side::left}), std::invalid_argument);
  REQUIRE_THROWS_AS(so6_generator({'K', 4, Side::right}), std::invalid_argument);
}

TEST_CASE("defining brackets of the rotations") {
  // J3 is what [K1, K2] yields, and the whole table follows the epsilon pattern
  REQUIRE(max_abs(bracket(k_right(1), k_right(2)) - I * j_right(3)) == 0.0);
  REQUIRE(max_abs(bracket(k_right(2), k_right(3)) - I * j_right(1)) == 0.0);
  REQUIRE(max_abs(bracket(k_right(3), k_right(1)) - I * j_right(2)) == 0.0);
  REQUIRE(max_abs(bracket(j_right(1), j_right(2)) - I * j_right(3)) == 0.0);
  REQUIRE(max_abs(bracket(j_right(1), k_right(2)) - I * k_right(3)) == 0.0);
  REQUIRE(max_abs(bracket(j_right(1), k_right(3)) + I * k_right(2)) == 0.0);
  for (int i = 1; i <= 3; ++i) {
    REQUIRE(max_abs(bracket(j_right(i), k_right(i))) == 0.0);
    Mat g = j_right(i);
    REQUIRE(max_abs(g - g.adjoint()) == 0.0);  // hermitian
    REQUIRE(std::abs(g.trace()) == 0.0);
  }
}

TEST_CASE("left rotations") {
  auto jl = derive_left_rotations();
  for (int i = 0; i < 3; ++i) {
    // Hermitian with entries in {0, +-i}, supported on the t-coordinate block
    REQUIRE(max_abs(jl[i] - jl[i].adjoint()) == 0.0);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) {
        cplx v = jl[i](r, c);
        REQUIRE((std::abs(v) == 0.0 || std::abs(v) == 1.0));
        if (std::abs(v) > 0) {
          REQUIRE(r >= 3);
          REQUIRE(c >= 3);
        }
      }
  }
  // so(3) table among themselves
  REQUIRE(max_abs(bracket(jl[0], jl[1]) - I * jl[2]) == 0.0);
  REQUIRE(max_abs(bracket(jl[1], jl[2]) - I * jl[0]) == 0.0);
  REQUIRE(max_abs(bracket(jl[2], jl[0]) - I * jl[1]) == 0.0);
  // commute with every right rotation
  for (int i = 0; i < 3; ++i)
    for (int j = 1; j <= 3; ++j) REQUIRE(max_abs(bracket(j_right(j), jl[i])) == 0.0);
}

TEST_CASE("su4 generators") {
  for (char kind : {'J', 'K'})
    for (int i = 1; i <= 3; ++i) {
      Mat g = su4_generator({kind, i, Side::joint});
      REQUIRE(max_abs(g - g.adjoint()) < 1e-15);
      REQUIRE(std::abs(g.trace()) < 1e-15);
      REQUIRE(max_abs(g) == 0.5);
    }
  // K3 is i times the displayed antidiagonal-block pattern
  Mat k3d = Mat::Zero(4, 4);
  k3d(0, 2) = -0.5;
  k3d(2, 0) = 0.5;
  k3d(1, 3) = 0.5;
  k3d(3, 1) = -0.5;
  REQUIRE(max_abs(su4_generator({'K', 3, Side::joint}) - I * k3d) == 0.0);
  // J3 carries +-1/2 on the diagonal after the bracket convention
  Mat j3 = su4_generator({'J', 3, Side::joint});
  REQUIRE(std::abs(j3(0, 0)) == 0.5);
  REQUIRE_THROWS_AS(su4_generator({'J', 1, Side::right}), std::invalid_argument);
}

TEST_CASE("structure constants") {
  std::array<Mat, 6> right;
  for (int i = 0; i < 3; ++i) {
    right[i] = j_right(i + 1);
    right[3 + i] = k_right(i + 1);
  }
  auto t = structure_constants(right);
  REQUIRE(t.closure_residual < 1e-14);
  REQUIRE(t.max_entry_diff(reference_tensor()) < 1e-13);
  REQUIRE(t.antisymmetry_residual() < 1e-13);
  REQUIRE(t.jacobi_residual() < 1e-12);

  // spot values: [K1,K2] = i J3, [J1,J2] = i J3, [J1,K2] = i K3, [J1,K3] = -i K2
  REQUIRE(t.c[3][4][2] == Catch::Approx(1.0));
  REQUIRE(t.c[0][1][2] == Catch::Approx(1.0));
  REQUIRE(t.c[0][4][5] == Catch::Approx(1.0));
  REQUIRE(t.c[0][5][4] == Catch::Approx(-1.0));

  // the su4 joint closes on the same tensor
  auto t4 = structure_constants(joint_basis(Rep::su4));
  REQUIRE(t4.max_entry_diff(t) < 1e-13);

  // a basis that does not close is rejected: sums of the two rotation families
  // with the shared boost leave the span under bracketing
  auto jl = derive_left_rotations();
  std::array<Mat, 6> sums;
  for (int i = 0; i < 3; ++i) {
    sums[i] = j_right(i + 1) + jl[i];
    sums[3 + i] = k_right(i + 1) + k_left(i + 1);
  }
  sums[5] = k_right(3);
  REQUIRE_THROWS_AS(structure_constants(sums), std::domain_error);
}

TEST_CASE("pair abelian") {
  auto jl = derive_left_rotations();
  REQUIRE(max_abs(bracket(j_right(1), jl[0])) == 0.0);
}

TEST_CASE("algebra intersection") {
  std::vector<Mat> gbar, gleft;
  auto jl = derive_left_rotations();
  for (int i = 1; i <= 3; ++i) {
    gbar.push_back(j_right(i));
    gbar.push_back(k_right(i));
    gleft.push_back(jl[i - 1]);
    gleft.push_back(k_left(i));
  }
  auto inter = algebra_intersection(gbar, gleft);
  REQUIRE(inter.size() == 1);
  Mat k3 = k_right(3);
  cplx scale = inter[0](2, 3) / k3(2, 3);
  REQUIRE(max_abs(inter[0] - scale * k3) < 1e-12);

  auto self = algebra_intersection(gbar, gbar);
  REQUIRE(self.size() == 6);

  std::vector<Mat> js = {j_right(1), j_right(2), j_right(3)};
  std::vector<Mat> ks = {k_right(1), k_right(2), k_right(3)};
  REQUIRE(algebra_intersection(js, ks).empty());
}

TEST_CASE("joint basis and iso map") {
  auto b6 = joint_basis(Rep::so6);
  auto b4 = joint_basis(Rep::su4);
  // generation formulas and the displayed K slots coincide in both reps
  REQUIRE(max_abs(b6[3] - k_right(1)) == 0.0);
  REQUIRE(max_abs(b6[4] - k_right(2)) == 0.0);
  REQUIRE(max_abs(b4[3] - su4_generator({'K', 1, Side::joint})) < 1e-15);
  REQUIRE(max_abs(b4[4] - su4_generator({'K', 2, Side::joint})) < 1e-15);

  AlgebraElement j3;
  j3.coeffs(2) = 1.0;
  j3.rep = Rep::su4;
  REQUIRE(max_abs(realize(iso_map(j3)) - b6[2]) == 0.0);
  AlgebraElement zero;
  REQUIRE(max_abs(realize(iso_map(zero))) == 0.0);

  // bracket compatibility for a random pair through the transport
  AlgebraElement x, y;
  x.coeffs << 0.7, -0.1, 0.4, 0.2, -0.3, 0.6;
  y.coeffs << -0.2, 0.5, 0.1, -0.4, 0.3, 0.2;
  auto t = structure_constants(b4);
  AlgebraElement br;
  br.rep = Rep::so6;
  for (int c = 0; c < 6; ++c) {
    double s = 0;
    for (int a = 0; a < 6; ++a)
      for (int bb = 0; bb < 6; ++bb) s += x.coeffs(a) * y.coeffs(bb) * t.c[a][bb][c];
    br.coeffs(c) = s;
  }
  Mat lhs = I * realize(br);
  Mat rhs = bracket(realize(iso_map(x)), realize(iso_map(y)));
  REQUIRE(max_abs(lhs - rhs) < 1e-12);
}

TEST_CASE("cartan decomposition") {
  auto rep = cartan_decomposition_check();
  REQUIRE(rep.pass);
  auto b = joint_basis(Rep::su4);
  std::vector<Mat> js = {b[0], b[1], b[2]}, ks = {b[3], b[4], b[5]};
  REQUIRE(span_distance(bracket(b[0], b[4]), ks) < 1e-14);  // [J1,K2] in k
  REQUIRE(span_distance(bracket(b[3], b[4]), js) < 1e-14);  // [K1,K2] in j
}

TEST_CASE("curvature") {
  auto b = joint_basis(Rep::su4);
  Mat k1 = b[3], k2 = b[4], k3 = b[5];
  REQUIRE(max_abs(curvature(k1, k2, k2) - k1) < 1e-14);
  REQUIRE(max_abs(curvature(k1, k1, k3)) == 0.0);
  REQUIRE(max_abs(curvature(k1, k2, k3)) < 1e-14);  // [[K1,K2],K3] = [iJ3,K3] = 0

  REQUIRE(sectional_curvature(k1, k2) == Catch::Approx(1.0).epsilon(1e-12));
  REQUIRE(sectional_curvature(k2, k3) == Catch::Approx(1.0).epsilon(1e-12));

  Rng rng(99);
  for (int t = 0; t < 100; ++t) {
    Mat x = Mat::Zero(4, 4), y = Mat::Zero(4, 4);
    for (int i = 0; i < 3; ++i) {
      x += rng.gaussian() * b[3 + i];
      y += rng.gaussian() * b[3 + i];
    }
    REQUIRE(std::abs(sectional_curvature(x, y) - 1.0) < 1e-9);
  }

  REQUIRE_THROWS_AS(sectional_curvature(k1, Mat(2.0 * k1)), std::invalid_argument);
  REQUIRE_THROWS_AS(curvature(b[0], k1, k2), std::invalid_argument);  // J1 outside k
}

TEST_CASE("covering map") {
  REQUIRE(covering_witness_residual() < 1e-10);

  AlgebraElement j3;
  j3.coeffs(2) = 1.0;
  auto cov = covering_check(j3, 4 * M_PI, 64);
  REQUIRE(cov.sign_flip_t == Catch::Approx(2 * M_PI).margin(1e-9));
  REQUIRE(cov.hom_residual < 1e-8);

  AlgebraElement zero;
  auto cz = covering_check(zero, 1.0, 8);
  REQUIRE(cz.sign_flip_t < 0);  // both paths constant at identity, no flip
}

TEST_CASE("unitary conversion transport") {
  auto rep = unitary_conversion_check();
  REQUIRE(rep.pass);
  // the transport respects brackets on arbitrary hermitian inputs too
  auto b = joint_basis(Rep::su4);
  Mat x = 0.3 * b[0] - 0.7 * b[4];
  Mat y = 1.1 * b[2] + 0.2 * b[5];
  REQUIRE(max_abs(bracket(wedge_square_action(x), wedge_square_action(y)) -
                  wedge_square_action(bracket(x, y))) < 1e-12);
}

TEST_CASE("spin membership") {
  auto rep = spin_membership_check();
  REQUIRE(rep.pass);

  GammaSet g = gamma_set();
  for (double th : {0.1, 1.0, 3.0})
    REQUIRE(nonunitarity(expm(Mat(I * th * sigma_munu(g, 1, 2)))) < 1e-10);
  for (int k = 1; k <= 3; ++k)
    REQUIRE(nonunitarity(expm(Mat(I * sigma_munu(g, 0, k)))) > 0.1);

  Mat u = expm(Mat(I * joint_basis(Rep::su4)[5]));
  Mat v = expm(Mat(I * sigma_munu(g, 0, 3)));
  REQUIRE(nonunitarity(Mat(u * v * u.adjoint())) > 0.1);
}
