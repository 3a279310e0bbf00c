#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dmv/errors.hpp"
#include "dmv/series.hpp"
#include "dmv/zeta.hpp"

using namespace dmv;
using doctest::Approx;

namespace {

// mpmath at 30 digits
constexpr double kZetaD2[] = {1.6449340668482264365, -0.9375482543158437537, 1.9892802342989010234,
                              -6.0001458028430448656, 24.001486393736461571};
constexpr double kGamma[] = {0.57721566490153286061, -0.072815845483676724861, -0.0096903631928723184845,
                             0.0020538344203033458662};
constexpr double kDelta[] = {0.60792710185402662866, 0.34649473470180221335, -0.17010599743565679298,
                             0.063116043617277670462, -0.020118139016144708943};

const ZetaContext& ctx() {
  static const ZetaContext z;
  return z;
}

}  // namespace

TEST_SUITE("zeta") {
  TEST_CASE("values") {
    const double pi = std::numbers::pi;
    CHECK(std::abs(ctx().zeta(2.0) - pi * pi / 6) <= 1e-14);
    CHECK(std::abs(ctx().zeta(3.0) - 1.2020569031595942854) <= 1e-14);
    for (int k = 3; k <= 6; ++k) {
      const double e = std::pow(10.0, -k);
      CHECK(std::abs(e * ctx().zeta(1.0 + e) - 1.0) <= 2 * e);
    }
    // first non-trivial zero
    CHECK(std::abs(ctx().zeta(cplx(0.5, 14.134725141734693790))) <= 1e-11);
    CHECK_THROWS_AS(ctx().zeta(1.0), PoleError);
  }

  TEST_CASE("derivatives at 2") {
    for (int j = 0; j <= 4; ++j) CHECK(std::abs(ctx().zeta_deriv(j) - kZetaD2[j]) <= 1e-10 * std::abs(kZetaD2[j]));
    CHECK(std::abs(zeta_deriv_fd(ctx(), 1, 2.0) - ctx().zeta_deriv(1)) <= 1e-8);
    CHECK(std::abs(zeta_deriv_fd(ctx(), 2, 2.0) - ctx().zeta_deriv(2)) <= 1e-8);
    CHECK_THROWS_AS(ctx().zeta_deriv(5), UnsupportedError);
  }

  TEST_CASE("Stieltjes constants") {
    for (int j = 0; j <= 3; ++j) CHECK(std::abs(ctx().stieltjes(j) - kGamma[j]) <= 1e-10);
    for (int j = 0; j <= 2; ++j) {
      const auto lim = stieltjes_defining_limit(j, 1000000);
      CHECK(std::abs(lim.value - ctx().stieltjes(j)) <= std::max(lim.tail_bound, 1e-12));
    }
  }

  TEST_CASE("g and delta coefficients") {
    CHECK(ctx().g_coeff(0) == 1.0);
    CHECK(std::abs(ctx().g_coeff(1) - kGamma[0]) <= 1e-12);
    CHECK(std::abs(ctx().g_coeff(2) + kGamma[1]) <= 1e-12);
    for (int j = 0; j <= 4; ++j) CHECK(std::abs(ctx().delta_coeff(j) - kDelta[j]) <= 1e-10);
    const double z2 = kZetaD2[0];
    CHECK(std::abs(ctx().delta_coeff(1) + kZetaD2[1] / (z2 * z2)) <= 1e-12);
    // series division of zeta(2 + s)
    const auto inv = reciprocal(ctx().zeta_series(2.0, 8));
    for (int j = 0; j <= 4; ++j) CHECK(std::abs(inv[j].real() - ctx().delta_coeff(j)) <= 1e-9);
  }

  TEST_CASE("entire functions") {
    CHECK(std::abs(ctx().entire_f(0.0) - 1.0) <= 1e-14);
    CHECK(std::abs(ctx().entire_h(0.0) - kDelta[0]) <= 1e-14);
    const cplx s = 0.3;
    const double h = 1e-4;
    const cplx fp = (ctx().entire_f(s + h) - ctx().entire_f(s - h)) / (2 * h);
    CHECK(std::abs(ctx().entire_F(s) - (s * fp - ctx().entire_f(s))) <= 1e-7);
    const cplx hp = (ctx().entire_h(s + h) - ctx().entire_h(s - h)) / (2 * h);
    CHECK(std::abs(ctx().entire_H(s) - hp) <= 1e-7);
    // continuous through the Taylor switch radius
    const double r = ZetaContext::taylor_radius();
    CHECK(std::abs(ctx().entire_f(0.999 * r) - ctx().entire_f(1.001 * r)) <= 1e-5);
  }
}
