#include <cmath>
#include <numbers>

#include "doctest.h"
#include "dmv/errors.hpp"
#include "dmv/main_term.hpp"
#include "dmv/smoothing.hpp"
#include "dmv/zeta.hpp"

using namespace dmv;

namespace {

const double kPi = std::numbers::pi;

const ZetaContext& ctx() {
  static const ZetaContext z;
  return z;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("main_term") {
  TEST_CASE("gamma_k(n) and w_k") {
    CHECK(gamma_kn(2, 0) == 2);
    CHECK(gamma_kn(2, 1) == 4);
    for (int k = 1; k <= 4; ++k)
      for (int n = 0; n <= 10; ++n) CHECK(gamma_kn(k, n) >= 0);
    CHECK(w_k(2, 1.0) == doctest::Approx(1.0));
    const auto c = w_k_coefficients(2);
    REQUIRE(c.size() == 5);
    const double expect[] = {-14, 32, -24, 8, -1};
    for (int i = 0; i < 5; ++i) CHECK(c[i] == doctest::Approx(expect[i]).epsilon(1e-14));
    for (double x : {0.5, 1.0, 1.7}) CHECK(w_k(3, x) + w_k(3, 3 - x) == doctest::Approx(42.0).epsilon(1e-12));
    CHECK_THROWS_AS(w_k(4, 1.0), UnsupportedError);
  }

  TEST_CASE("Q polynomials") {
    const SmoothingKernel k(0.1);
    const auto Q = QPolynomialSet::from(ctx(), k);
    for (int j = 0; j <= 4; ++j) CHECK(int(Q.coefficients(j).size()) == j + 1);
    CHECK(q_poly(Q, 4, 1, 1) == doctest::Approx(1 / (24 * kPi * kPi / 6)).epsilon(1e-13));
    for (double X : {-1.3, 0.2, 1.0, 2.5})
      for (double y : {-3.0, 0.7, 11.0}) {
        const double lhs = 24 * (kPi * kPi / 6) * q_poly(Q, 4, X * y, y) / std::pow(y, 4);
        CHECK(lhs == doctest::Approx(w_k(2, X)).epsilon(1e-12));
      }
    // leading x^3 coefficient of the gamma form
    const double gamma = ctx().stieltjes(0), z1 = ctx().zeta_deriv(1), c1 = k.c_coeff(1);
    const auto g3 = q_gamma_form_coefficients(3, ctx(), Q.c());
    CHECK(g3[0] == doctest::Approx(4 * gamma / (kPi * kPi) - 12 * z1 / std::pow(kPi, 4) - c1 / (kPi * kPi)).epsilon(1e-13));
    CHECK(Q.coefficients(3)[0] == doctest::Approx(g3[0]).epsilon(1e-12));
    // the two forms agree with the smoothing coefficients switched off
    auto c0 = Q.c();
    for (std::size_t i = 1; i < c0.size(); ++i) c0[i] = 0;
    const QPolynomialSet sharp(Q.g(), Q.delta(), c0);
    for (int j = 0; j <= 3; ++j)
      CHECK(q_poly(sharp, j, 9.5, 7.25) == doctest::Approx(q_poly_gamma_form(j, 9.5, 7.25, c0, ctx())).epsilon(1e-12));
    CHECK_THROWS_AS(q_poly(Q, 5, 1, 1), UnsupportedError);
  }

  TEST_CASE("cancellation coefficients") {
    const auto g = ctx().g_model(), d = ctx().delta_model();
    for (double mu : {0.05, 0.3}) {
      const SmoothingKernel k(mu);
      const auto c = model_c_coefficients(k);
      const auto Q = QPolynomialSet::from(ctx(), k);
      for (auto [L, Y] : {std::pair{5.5, 14.0}, std::pair{10.0, 10.0}, std::pair{13.2, 6.1}}) {
        const auto C = c_coefficients(L, Y, g, d, c);
        for (int j = 0; j < 4; ++j) CHECK(std::abs(C[j]) <= 1e-9);
        CHECK(std::abs(C[4] - Q.total(Y, L)) <= 1e-9);
      }
    }
    CHECK_THROWS_AS(c_coefficients(5, 5, {1, 2, 3}, d, g), DomainError);
  }

  TEST_CASE("residues") {
    const SmoothingKernel k(0.1);
    const ResidueEvaluator ev(ctx(), k, 3000, 20000);
    const ShiftPair p{cplx(0.021, 0.004), cplx(-0.013, 0.011)}, q{p.b, p.a};
    CHECK(rel(ev.r1(q), ev.r1(p)) <= 1e-9);
    CHECK(rel(ev.r2(q), ev.r2(p)) <= 1e-9);
    CHECK(rel(ev.r_total(p), ev.r_sum(p)) <= 1e-9);
    // first R11 block retyped from its display
    const auto b = ev.blocks(p);
    const cplx ab = p.a + p.b;
    const double t = 3000, K = 20000, X = std::log(2 * kPi * K / t);
    const double g1 = ctx().g_coeff(1), c1 = k.c_coeff(1);
    const cplx first = -std::pow(2 * kPi / t, ab) * ctx().entire_h(-ab) *
                       (ctx().entire_F(-ab) / (ab * ab) + ctx().entire_f(-ab) * (X + g1 + c1) / ab);
    const cplx second = -std::pow(K, -ab) * ctx().entire_h(-ab) * k.g_big(-ab) * ctx().entire_f(-ab) / (ab * ab);
    CHECK(rel(b.r11, first + second) <= 1e-12);
    // the R1' terms cancel in M0 + M1
    const auto with = assemble_residues(ev.r1(p), ev.r1_prime(p), ev.r2(p));
    const auto without = assemble_residues(ev.r1(p), 0.0, ev.r2(p));
    CHECK(rel(with.total, without.total) <= 1e-14);
    // kappa coincidences
    const auto kap = ev.kappas(p);
    CHECK(rel(kap.k12, kap.k28) <= 1e-12);
    CHECK(rel(kap.k11, kap.kt28) <= 1e-12);
    CHECK_THROWS_AS(ev.r1(ShiftPair{0.01, 0.01}), PoleError);
    CHECK_THROWS_AS(ev.r1(ShiftPair{0.06, 0.01}), DomainError);
  }

  TEST_CASE("residue limit in float128") {
    const SmoothingKernel k(0.1);
    const double Y = std::log(20000.0), L = std::log(3000 / (2 * kPi));
    const auto m = make_quad_provider(ctx(), k);
    const double target = QPolynomialSet::from(ctx(), k).total(Y, L);
    double prev = 0;
    for (double h : {1e-2, 1e-3, 1e-4}) {
      const double e =
          std::abs(double(residue::r_total_kappa(m, qcplx(h), qcplx(2 * h), qreal(Y), qreal(L)).real()) - target);
      if (prev > 0) CHECK(std::log10(prev / e) >= 0.9);
      prev = e;
    }
  }

  TEST_CASE("limit lemma") {
    const auto a = limit_lemma_check([](cplx z) { return std::exp(z); }, [](cplx z) { return std::exp(z); }, 0.3);
    CHECK(std::abs(a.derivative_form) <= 1e-12);
    CHECK(std::abs(a.quotient_limit) <= 1e-12);
    const auto b = limit_lemma_check([](cplx z) { return z; }, [](cplx) { return cplx(1.0); }, 0.7);
    CHECK(std::abs(b.derivative_form - 1.0) <= 1e-10);
    CHECK(std::abs(b.quotient_limit - 1.0) <= 1e-10);
  }

  TEST_CASE("integrated main term") {
    const WeightWindow w(4000, 1000);
    std::array<std::vector<double>, 5> ones{std::vector<double>{1.0}, {0.0, 0.0}, {0.0, 0.0, 0.0},
                                            {0.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 0.0, 0.0}};
    const QPolynomialSet unit(ones);
    const auto m = main_term_integral(1e5, w, unit);
    CHECK(m.total == doctest::Approx(w.omega_hat(0.0).real()).epsilon(1e-12));
    const auto Q = QPolynomialSet::from(ctx(), SmoothingKernel(0.1));
    const auto full = main_term_integral(1e5, w, Q);
    CHECK(full.doubling_change <= 1e-10);
    double sum = 0;
    for (double v : full.per_degree) sum += v;
    CHECK(sum == doctest::Approx(full.total).epsilon(1e-14));
    // narrow transitions approach the sharp integral over [T, 2T]
    const auto sharp = main_term_integral_sharp(1e5, 4000, 8000, Q);
    const auto narrow = main_term_integral(1e5, WeightWindow(4000, 1), Q);
    CHECK(std::abs(narrow.total - sharp.total) / sharp.total <= 1e-3);
    // in t the integrand is smooth, so the sharp form is exact against a fine rule
    const auto sharp2 = main_term_integral_sharp(1e5, 4000, 8000, Q, 32);
    CHECK(sharp2.total == doctest::Approx(sharp.total).epsilon(1e-12));
  }

  TEST_CASE("a_k constants") {
    CHECK(std::abs(a_k_constant(2, 1000000).value - 6 / (kPi * kPi)) <= 1e-8);
    CHECK(a_k_local_factor(2, 2) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(a_k_local_factor(2, 7) == doctest::Approx(1 - 1.0 / 49).epsilon(1e-14));
    // tau_3(p^a) = C(a + 2, 2)
    double direct = 0;
    for (int a = 0; a < 200; ++a) direct += std::pow((a + 1) * (a + 2) / 2.0, 2) * std::pow(0.5, a);
    CHECK(a_k_local_factor(3, 2) == doctest::Approx(std::pow(0.5, 9) * direct).epsilon(1e-13));
    double prev = 0;
    for (std::int64_t P : {1000, 10000, 100000}) {
      const auto a3 = a_k_constant(3, P);
      if (prev > 0) CHECK(std::abs(a3.value - prev) <= 10 * a3.error_estimate + 1e-6);
      prev = a3.value;
    }
    CHECK_THROWS_AS(a_k_constant(4, 1000), UnsupportedError);
  }
}
