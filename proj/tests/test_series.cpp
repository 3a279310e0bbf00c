#include <cmath>
#include <random>

#include "doctest.h"
#include "dmv/errors.hpp"
#include "dmv/series.hpp"

using namespace dmv;

namespace {

PowerSeries random_series(std::mt19937_64& gen, int order) {
  std::uniform_real_distribution<double> u(-1, 1);
  PowerSeries s(order);
  for (int j = 0; j <= order; ++j) s[j] = cplx(u(gen), u(gen));
  return s;
}

double max_rel(const PowerSeries& a, const PowerSeries& b) {
  double m = 0;
  for (int j = 0; j <= std::min(a.order(), b.order()); ++j)
    m = std::max(m, std::abs(a[j] - b[j]) / std::max(1.0, std::abs(b[j])));
  return m;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("convolution of geometric sequences") {
    const PowerSeries one{1, 1, 1, 1};
    const auto r = convolve(one, one);
    for (int j = 0; j < 4; ++j) CHECK(r[j] == cplx(j + 1));
  }

  TEST_CASE("unit element and truncation to the shorter order") {
    const PowerSeries a{0.5, -2, 3, 7, 1.5};
    const PowerSeries e{1, 0, 0, 0, 0, 0, 0};
    const auto r = convolve(a, e);
    CHECK(r.order() == 4);
    CHECK(max_rel(r, a) == 0.0);
    CHECK((a + e).order() == 4);
  }

  TEST_CASE("commutative and associative on random triples") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_series(gen, 8), b = random_series(gen, 8), c = random_series(gen, 8);
      CHECK(max_rel(convolve(a, b), convolve(b, a)) <= 1e-14);
      CHECK(max_rel(convolve(convolve(a, b), c), convolve(a, convolve(b, c))) <= 1e-14);
      CHECK(max_rel(alternate(convolve(a, b)), convolve(alternate(a), alternate(b))) <= 1e-14);
    }
  }

  TEST_CASE("alternate") {
    const PowerSeries a{1, 1, 1};
    const auto r = alternate(a);
    CHECK(r[0] == 1.0);
    CHECK(r[1] == -1.0);
    CHECK(r[2] == 1.0);
    std::mt19937_64 gen(3);
    const auto s = random_series(gen, 6);
    CHECK(max_rel(alternate(alternate(s)), s) == 0.0);
    const double Y = 2.7;
    const auto m = alternate(exp_series(Y, 6));
    double fact = 1;
    for (int j = 0; j <= 6; ++j) {
      if (j > 0) fact *= j;
      CHECK(std::abs(m[j] - std::pow(-Y, j) / fact) <= 1e-15 * std::max(1.0, std::abs(m[j])));
    }
  }

  TEST_CASE("exp_series") {
    const auto z = exp_series(0, 4);
    CHECK(z.order() == 4);
    CHECK(z[0] == 1.0);
    for (int j = 1; j <= 4; ++j) CHECK(z[j] == 0.0);
    const auto e = exp_series(1, 3);
    CHECK(e[2].real() == doctest::Approx(0.5));
    CHECK(e[3].real() == doctest::Approx(1.0 / 6));
    CHECK(max_rel(convolve(exp_series(1.3, 10), exp_series(-0.4, 10)), exp_series(0.9, 10)) <= 1e-12);
    const double L = 9.1;
    const cplx s(0.01, 0.02);
    CHECK(std::abs(evaluate(exp_series(L, 20), s) - std::exp(s * L)) <= 1e-14);
    CHECK_THROWS_AS(exp_series(1, -1), DomainError);
  }

  TEST_CASE("evaluate, reciprocal, exp and log") {
    const PowerSeries one{1, 0, 0};
    CHECK(evaluate(one, cplx(3.0, -2.0)) == cplx(1.0));
    std::mt19937_64 gen(11);
    auto a = random_series(gen, 8);
    a[0] = 1.0;
    CHECK(max_rel(convolve(a, reciprocal(a)), PowerSeries{1, 0, 0, 0, 0, 0, 0, 0, 0}) <= 1e-13);
    CHECK(max_rel(series_exp(series_log(a)), a) <= 1e-12);
    const auto d = derivative(PowerSeries{1, 2, 3, 4});
    CHECK(d[0] == 2.0);
    CHECK(d[1] == 6.0);
    CHECK(d[2] == 12.0);
  }
}
