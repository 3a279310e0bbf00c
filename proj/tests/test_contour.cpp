#include <cmath>

#include "doctest.h"
#include "dmv/contour.hpp"
#include "dmv/errors.hpp"
#include "dmv/smoothing.hpp"
#include "dmv/zeta.hpp"

using namespace dmv;

TEST_SUITE("contour") {
  TEST_CASE("line invariance and the diagonal sum") {
    const ZetaContext zeta;
    const SmoothingKernel k(0.4);
    const WeightWindow w(1000, 250);
    const ShiftSet I{0.02, 0.0}, J{0.035, 0.0};
    const auto a = m0_contour(zeta, I, J, 1e3, k, w, 0.1, 150);
    const auto b = m0_contour(zeta, I, J, 1e3, k, w, 0.2, 150);
    CHECK(std::abs(a.per_unit_mass - b.per_unit_mass) / std::abs(a.per_unit_mass) <= 1e-8);
    const cplx diag = m0_diagonal_sum(I, J, 1e3, k);
    CHECK(std::abs(a.per_unit_mass - diag) / std::abs(diag) <= 1e-7);
    CHECK(std::abs(a.value - w.omega_hat(0.0) * a.per_unit_mass) <= 1e-12 * std::abs(a.value));
  }

  TEST_CASE("conjugate-closed shifts give a real integral") {
    const ZetaContext zeta;
    const SmoothingKernel k(0.4);
    const WeightWindow w(1000, 250);
    const ShiftSet I{cplx(0.02, 0.01), cplx(0.02, -0.01)}, J{0.035, 0.0};
    const auto a = m0_contour(zeta, I, J, 1e3, k, w, 0.1, 150);
    CHECK(std::abs(a.per_unit_mass.imag()) <= 1e-10 * std::abs(a.per_unit_mass));
    const cplx diag = m0_diagonal_sum(I, J, 1e3, k);
    CHECK(std::abs(a.per_unit_mass - diag) / std::abs(diag) <= 1e-7);
  }

  TEST_CASE("argument checks") {
    const ZetaContext zeta;
    const SmoothingKernel k(0.1);
    const WeightWindow w(1000, 250);
    CHECK_THROWS_AS(m0_contour(zeta, ShiftSet{-0.2}, ShiftSet{0.05}, 1e3, k, w, 0.1, 100), DomainError);
    CHECK_THROWS_AS(m0_contour(zeta, ShiftSet{0.02}, ShiftSet{0.05}, 1e3, k, w, 0.1, 5), ConvergenceError);
  }
}
