#include <cmath>

#include "doctest.h"
#include "dmv/errors.hpp"
#include "dmv/smoothing.hpp"

using namespace dmv;

namespace {

// mpmath at 30 digits
constexpr double kC01[] = {1.0, 0.039686103533782737043, 0.00087043518591409455729, 1.380918757066961234e-5,
                           1.7547157822383650358e-7};
constexpr double kC03[] = {1.0, 0.11421471718672735572, 0.0071617546243281816898, 0.00032311365919779830357,
                           1.1628936072896001878e-5};

}  // namespace

TEST_SUITE("smoothing") {
  TEST_CASE("Gauss-Legendre rules") {
    for (int n : {4, 8, 16, 32, 64, 128}) {
      const auto& r = gauss_legendre(n);
      REQUIRE(int(r.x.size()) == n);
      double w = 0, m2 = 0, m6 = 0;
      for (int i = 0; i < n; ++i) {
        w += r.w[i];
        m2 += r.w[i] * r.x[i] * r.x[i];
        m6 += r.w[i] * std::pow(r.x[i], 6);
      }
      CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
      CHECK(m2 == doctest::Approx(2.0 / 3).epsilon(1e-14));
      CHECK(m6 == doctest::Approx(2.0 / 7).epsilon(1e-13));
    }
    CHECK_THROWS_AS(gauss_legendre(5), UnsupportedError);
  }

  TEST_CASE("kernel shape") {
    const SmoothingKernel k(0.1);
    CHECK(k.phi(0.5) == 1.0);
    CHECK(k.phi(1.0) == 1.0);
    CHECK(k.phi(1.1) == 0.0);
    CHECK(k.phi(2.0) == 0.0);
    // int phi phi' over [1, 1 + mu] = -1/2
    const auto& r = gauss_legendre(64);
    double acc = 0;
    for (std::size_t i = 0; i < r.x.size(); ++i) {
      const double t = 1.05 + 0.05 * r.x[i];
      acc += 0.05 * r.w[i] * k.phi(t) * k.phi_prime(t);
    }
    CHECK(acc == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK_THROWS_AS(SmoothingKernel(0.0), DomainError);
  }

  TEST_CASE("Mellin transforms") {
    const SmoothingKernel k1(0.1), k3(0.3);
    CHECK(std::abs(k1.mellin_phi(2.0) - 0.55138459355085541109) <= 1e-12);
    CHECK(std::abs(k3.mellin_phi(2.0) - 0.6624613419576986998) <= 1e-12);
    for (int e = 3; e <= 6; ++e) {
      const double s = std::pow(10.0, -e);
      CHECK(std::abs(s * k1.mellin_phi(s) - 1.0) <= 2 * s);
    }
    const double m1 = k1.mellin_phi(1.0).real();
    CHECK(m1 >= 1.0);
    CHECK(m1 <= 1.1);
    const double p1 = k1.phi2_mellin(1.0).real();
    CHECK(p1 >= 1.0);
    CHECK(p1 <= 1.1);
    CHECK_THROWS_AS(k1.phi2_mellin(0.0), PoleError);
  }

  TEST_CASE("decay of Phi_2 along vertical lines, m = 2") {
    for (double mu : {0.1, 0.3}) {
      const SmoothingKernel k(mu);
      for (double sigma : {0.1, 0.5}) {
        for (double tau : {10.0, 100.0, 1000.0}) {
          const cplx s(sigma, tau);
          const double bound = std::pow(mu, -1.0) * std::pow(1 + mu, sigma + 1) / std::abs(s * (s + 1.0));
          CHECK(std::abs(k.phi2_mellin(s)) <= 4 * bound);
        }
      }
    }
  }

  TEST_CASE("c_j coefficients") {
    const SmoothingKernel k1(0.1), k3(0.3);
    CHECK(std::abs(k1.g_big(0.0) - 1.0) <= 1e-14);
    CHECK(k1.c_coeff(0) == 1.0);
    for (int j = 0; j <= 4; ++j) {
      CHECK(std::abs(k1.c_coeff(j) - kC01[j]) <= 1e-12 * std::max(1.0, kC01[j] * 1e3));
      CHECK(std::abs(k3.c_coeff(j) - kC03[j]) <= 1e-12 * std::max(1.0, kC03[j] * 1e3));
    }
    CHECK(k1.c_coeff(1) > 0.0);
    CHECK(k1.c_coeff(1) < 0.1);
    const double h = 1e-4;
    CHECK(std::abs((k1.g_big(h).real() - 1.0) / h - k1.c_coeff(1)) <= 1e-6);
    // Cauchy coefficients on |s| = 0.1 (trapezoid rule, exponentially accurate)
    const int n = 64;
    for (int j = 1; j <= 3; ++j) {
      cplx acc = 0;
      for (int i = 0; i < n; ++i) {
        const cplx s = std::polar(0.1, 2 * M_PI * i / n);
        acc += k1.g_big(s) / std::pow(s, j);
      }
      CHECK(std::abs(acc / double(n) - kC01[j]) <= 1e-8);
    }
  }

  TEST_CASE("weight window") {
    const WeightWindow w(1000, 50);
    const double m = w.omega_hat(0.0).real();
    CHECK(m >= 900);
    CHECK(m <= 1100);
    CHECK(w.omega(1500) == 1.0);
    CHECK(w.omega(900) == 0.0);
    CHECK(std::abs(w.omega_hat(10.0 / 50)) <= 1e-6 * m);
    CHECK_THROWS_AS(WeightWindow(1000, 0), DomainError);
    CHECK_THROWS_AS(WeightWindow(1000, 600), DomainError);
  }
}
