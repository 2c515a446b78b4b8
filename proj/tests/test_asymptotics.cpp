#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "cpmp/asymptotics.hpp"

using namespace cpmp;
using std::numbers::pi;

//==============================================================================
TEST_CASE("retarded octupole-trace coefficient") {
  const auto pm = PermittivityModel::perfect_mirror();

  SUBCASE("mirror closed form with identity polarizability") {
    // Tr[I . diag(2,2,1)] = 5
    CHECK(retarded_od_trace(Mat3::identity(), pm) ==
          doctest::Approx(-5.0 / (160.0 * pi * pi)).epsilon(1e-14));
  }

  SUBCASE("eps = 1 vanishes") {
    CHECK(retarded_od_trace(Mat3::identity(), PermittivityModel::constant(1.0)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("component v-integrals reproduce the (2,2,1) pattern") {
    // with r_s = -1, r_p = +1 the general-eps path must hit the mirror
    // values: int (-1 - v^2)/v^6 = -8/15 per in-plane axis and
    // int (2 - 2 v^2)/v^6 = -4/15 for zz, i.e. -(3/128pi^2)(8/15,8/15,4/15)
    // equals -(1/160pi^2)(2,2,1)
    const Mat3 axx = Mat3::diag(1, 0, 0);
    const Mat3 azz = Mat3::diag(0, 0, 1);
    const double big = 1e13; // effectively a mirror for the numeric path
    const auto nearly = PermittivityModel::constant(big);
    CHECK(retarded_od_trace(axx, nearly) ==
          doctest::Approx(3.0 / (128.0 * pi * pi) * (-8.0 / 15.0)).epsilon(1e-5));
    CHECK(retarded_od_trace(azz, nearly) ==
          doctest::Approx(3.0 / (128.0 * pi * pi) * (-4.0 / 15.0)).epsilon(1e-5));
    CHECK(3.0 / (128.0 * pi * pi) * (8.0 / 15.0) ==
          doctest::Approx(2.0 / (160.0 * pi * pi)).epsilon(1e-15));
  }

  SUBCASE("monotone approach to the mirror value") {
    double prev = 0.0;
    for (const double eps : {10.0, 1e2, 1e4, 1e6}) {
      const double c = retarded_od_trace(Mat3::identity(), PermittivityModel::constant(eps));
      CHECK(std::abs(c) > std::abs(prev));
      prev = c;
    }
    CHECK(std::abs(prev) < 5.0 / (160.0 * pi * pi));
  }
}

//==============================================================================
TEST_CASE("retarded quadrupole coefficient") {
  const auto pm = PermittivityModel::perfect_mirror();
  CHECK(retarded_qq(1.0, pm) == doctest::Approx(-5.0 / (64.0 * pi * pi)).epsilon(1e-14));
  CHECK(retarded_qq(1.0, PermittivityModel::constant(1.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // strictly between zero and the mirror value for finite eps
  const double c2 = retarded_qq(1.0, PermittivityModel::constant(2.0));
  CHECK(c2 < 0.0);
  CHECK(std::abs(c2) < 5.0 / (64.0 * pi * pi));
}

TEST_CASE("retarded dipole coefficient") {
  CHECK(retarded_dd(1.0, PermittivityModel::perfect_mirror()) ==
        doctest::Approx(-3.0 / (32.0 * pi * pi)).epsilon(1e-14));
  const double c2 = retarded_dd(1.0, PermittivityModel::constant(2.0));
  CHECK(c2 < 0.0);
  CHECK(std::abs(c2) < 3.0 / (32.0 * pi * pi));
}

TEST_CASE("monotone eps sweep across channels") {
  double prev_qq = 0.0, prev_dd = 0.0;
  for (const double eps : {10.0, 1e2, 1e4, 1e6}) {
    const auto m = PermittivityModel::constant(eps);
    const double cq = retarded_qq(1.0, m);
    const double cd = retarded_dd(1.0, m);
    CHECK(std::abs(cq) > std::abs(prev_qq));
    CHECK(std::abs(cd) > std::abs(prev_dd));
    prev_qq = cq;
    prev_dd = cd;
  }
  CHECK(std::abs(prev_qq) < 5.0 / (64.0 * pi * pi));
  CHECK(std::abs(prev_dd) < 3.0 / (32.0 * pi * pi));
  CHECK(prev_qq == doctest::Approx(-5.0 / (64.0 * pi * pi)).epsilon(1e-3));
  CHECK(prev_dd == doctest::Approx(-3.0 / (32.0 * pi * pi)).epsilon(1e-3));
}

//==============================================================================
TEST_CASE("isotropic od/do coefficients and the convention bridge") {
  const auto [od, do_] = retarded_od_do_isotropic(1.0, 1.0);
  CHECK(od == doctest::Approx(-1.0 / (96.0 * pi * pi)).epsilon(1e-14));
  CHECK(do_ == od);

  SUBCASE("agrees with the anisotropic form for isotropic polarizability") {
    // for alpha = a I: matrix path gives -(5 a)/(160 pi^2) = -a/(32 pi^2);
    // the isotropic path takes the full trace 3a: -(3a)/(96 pi^2) = same
    const double a = 0.37;
    const Mat3 alpha = a * Mat3::identity();
    const double matrix_path = retarded_od_trace(alpha, PermittivityModel::perfect_mirror());
    const double scalar = sm_scalar_from_matrix(alpha);
    CHECK(scalar == doctest::Approx(3.0 * a));
    const double iso_path = retarded_od_do_isotropic(scalar, scalar).od;
    CHECK(matrix_path == doctest::Approx(iso_path).epsilon(1e-14));
  }

  SUBCASE("zero in, zero out") {
    const auto z = retarded_od_do_isotropic(0.0, 0.0);
    CHECK(z.od == 0.0);
    CHECK(z.do_ == 0.0);
  }
}

//==============================================================================
TEST_CASE("channel ratio") {
  CHECK(ratio_od_do_over_qq(3.915, 0.0, 1.0) == doctest::Approx(2.0 / 15.0 * 3.915));
  CHECK(ratio_od_do_over_qq(7.5, 0.0, 1.0) == doctest::Approx(1.0));
  CHECK(ratio_od_do_over_qq(0.0, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(ratio_od_do_over_qq(1.0, 1.0, 0.0), std::invalid_argument);
}

//==============================================================================
TEST_CASE("scaling exponent fit") {
  std::vector<double> z, u;
  for (int n = 0; n < 9; ++n) {
    const double zz = std::pow(10.0, -1.0 + n * 0.25);
    z.push_back(zz);
    u.push_back(-std::pow(zz, -6.0));
  }
  CHECK(fit_scaling_exponent(z, u, 0.05, 20.0) == doctest::Approx(-6.0).epsilon(1e-12));

  SUBCASE("sign change rejected") {
    u[4] = -u[4];
    CHECK_THROWS_AS(fit_scaling_exponent(z, u, 0.05, 20.0), std::invalid_argument);
  }
  SUBCASE("too few points rejected") {
    CHECK_THROWS_AS(fit_scaling_exponent(z, u, 0.09, 0.2), std::invalid_argument);
  }
}
