#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "oracle/oracle.hpp"
#include "zetaspec/error.hpp"
#include "zetaspec/numtheory.hpp"

using namespace zetaspec;

TEST_CASE("zeta_euler_maclaurin known values") {
  CHECK(std::abs(zeta_euler_maclaurin({2.0, 0.0}) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-14);
  CHECK(std::abs(zeta_euler_maclaurin({4.0, 0.0}) - std::pow(std::numbers::pi, 4) / 90.0) < 1e-14);
  CHECK(std::abs(zeta_euler_maclaurin({0.5, 0.0}).real() - (-1.4603545088095868)) < 1e-13);
  CHECK(std::abs(zeta_euler_maclaurin({0.0, 0.0}).real() + 0.5) < 1e-13);
  CHECK_THROWS_AS(zeta_euler_maclaurin({1.0, 0.0}), DomainError);
}

TEST_CASE("zeta_euler_maclaurin agrees with the long-double oracle off the critical line") {
  for (double sigma : {0.5, 0.75, 1.25, 2.0}) {
    for (double t : {1.0, 17.5, 133.3, 777.7, 4000.0}) {
      const auto got = zeta_euler_maclaurin({sigma, t});
      const auto want = oracle::zeta(sigma, t);
      const double err = std::hypot(got.real() - static_cast<double>(want.real()),
                                    got.imag() - static_cast<double>(want.imag()));
      CHECK_MESSAGE(err < 1e-10, "sigma=" << sigma << " t=" << t << " err=" << err);
    }
  }
}

TEST_CASE("log_gamma and theta") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(std::abs(log_gamma({0.5, 0.0}).real() - 0.5 * std::log(std::numbers::pi)) < 1e-14);
  CHECK(std::abs(log_gamma({10.0, 0.0}).real() - std::lgamma(10.0)) < 1e-12);
  CHECK_THROWS_AS(log_gamma({0.0, 1.0}), DomainError);

  CHECK(siegel_theta(0.0) == doctest::Approx(0.0));
  for (double t : {0.5, 3.0, 14.1, 90.0, 640.0, 2500.0}) {
    CHECK(std::abs(siegel_theta(t) - static_cast<double>(oracle::theta(t))) < 1e-10);
  }
  for (double t : {20.0, 100.0, 1000.0}) {
    CHECK(std::abs(siegel_theta(t) - siegel_theta_asymptotic(t)) < 1e-9);
  }
}

TEST_CASE("riemann_siegel_z reference values") {
  CHECK(std::abs(riemann_siegel_z(14.134725)) < 1e-6);
  CHECK(std::abs(static_cast<double>(oracle::hardy_z(14.134725))) < 1e-6);

  const double z14 = riemann_siegel_z(14.0);
  const double z15 = riemann_siegel_z(15.0);
  CHECK(z14 * z15 < 0.0);
  CHECK((z14 < 0) == (oracle::hardy_z(14.0) < 0));
  CHECK((z15 < 0) == (oracle::hardy_z(15.0) < 0));

  const double oracle_zero = static_cast<double>(oracle::hardy_z(0.0));
  CHECK(std::abs(oracle_zero - (-1.46035)) < 1e-5);
  CHECK(std::abs(riemann_siegel_z(0.0) - oracle_zero) < 1e-12);
}

TEST_CASE("riemann_siegel_z rejects negative or non-finite t") {
  CHECK_THROWS_AS(riemann_siegel_z(-1e-3), DomainError);
  CHECK_THROWS_AS(riemann_siegel_z(std::nan("")), DomainError);
  CHECK_THROWS_AS(riemann_siegel_z_asymptotic(5.0), DomainError);
}

TEST_CASE("riemann_siegel_z matches frozen mpmath values") {
  // Euler-Maclaurin below the switch point is near machine precision; Riemann-Siegel above it is ~1e-9.
  for (const auto& [t, z] : fixtures::kZSamples) {
    const double tol = t < ZOptions{}.switch_point ? 1e-11 : 5e-9;
    CHECK_MESSAGE(std::abs(riemann_siegel_z(t) - z) < tol, "t=" << t);
  }
}

TEST_CASE("riemann_siegel_z matches the Euler-Maclaurin oracle on 1000 points over [10, 1000]") {
  double worst = 0.0;
  double worst_t = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double t = 10.0 + 990.0 * i / 999.0;
    const double err = std::abs(riemann_siegel_z(t) - static_cast<double>(oracle::hardy_z(t)));
    if (err > worst) {
      worst = err;
      worst_t = t;
    }
  }
  INFO("worst error " << worst << " at t=" << worst_t);
  CHECK(worst < 1e-8);
}

TEST_CASE("Riemann-Siegel and Euler-Maclaurin routes agree above the switch point") {
  const ZOptions em_only{1e9};
  for (double t = 250.0; t <= 1000.0; t += 7.3) {
    CHECK(std::abs(riemann_siegel_z_asymptotic(t) - riemann_siegel_z(t, em_only)) < 1e-8);
  }
}

TEST_CASE("switch point selects the evaluation route") {
  // Below ~100 the asymptotic series is visibly worse than the direct route.
  const double t = 20.5;
  const double direct = riemann_siegel_z(t, ZOptions{250.0});
  const double asymptotic = riemann_siegel_z(t, ZOptions{10.0});
  CHECK(asymptotic == riemann_siegel_z_asymptotic(t));
  CHECK(std::abs(direct - static_cast<double>(oracle::hardy_z(t))) < 1e-12);
  CHECK(std::abs(asymptotic - direct) < 1e-4);
}
