#pragma once

// Residue forms of the shifted fourth-moment main term, the degree-by-degree
// cancellation coefficients C(j), and the integrated main term.

#include <array>
#include <functional>
#include <vector>

#include "dmv/qpoly.hpp"
#include "dmv/residues.hpp"
#include "dmv/series.hpp"

namespace dmv {

class ZetaContext;
class SmoothingKernel;
class WeightWindow;

struct ShiftPair {
  cplx a, b;
};

// PoleError when |a|, |b|, |a - b| or |a + b| < 1e-8; DomainError when
// |a| or |b| > 0.05.
void check_shift_pair(const ShiftPair& p);

// f, h, F, H from ZetaContext and G from the smoothing kernel, in double.
class ZetaProvider {
 public:
  using complex_type = cplx;
  using real_type = double;

  ZetaProvider(const ZetaContext& zeta, const SmoothingKernel& kernel);

  cplx f(cplx s) const;
  cplx h(cplx s) const;
  cplx F(cplx s) const;
  cplx H(cplx s) const;
  cplx G(cplx s) const;
  double g1() const { return g1_; }
  double c1() const { return c1_; }

 private:
  const ZetaContext& zeta_;
  const SmoothingKernel& kernel_;
  double g1_, c1_;
};

// Polynomial models of f, h, G to the cached model order, in float128.
using QuadTaylorProvider = TaylorProvider<qcplx, qreal>;
QuadTaylorProvider make_quad_provider(const ZetaContext& zeta, const SmoothingKernel& kernel);
std::vector<double> model_c_coefficients(const SmoothingKernel& kernel);

// Residues in double at height t and length K.
class ResidueEvaluator {
 public:
  ResidueEvaluator(const ZetaContext& zeta, const SmoothingKernel& kernel, double t, double K);

  double Y() const { return Y_; }
  double L() const { return L_; }

  cplx r1(const ShiftPair& p) const;
  cplx r1_prime(const ShiftPair& p) const;
  cplx r2(const ShiftPair& p) const;
  ResidueBlocks<cplx> blocks(const ShiftPair& p) const;
  KappaTable<cplx> kappas(const ShiftPair& p) const;
  // R(a, b) from the kappa table.
  cplx r_total(const ShiftPair& p) const;
  // R1 + R2 from the separate displays.
  cplx r_sum(const ShiftPair& p) const;

 private:
  ZetaProvider model_;
  double Y_, L_;
};

// M0 + M1 in residue form: M0 contributes R1 + R1', M1 contributes R2 - R1'.
struct ResidueAssembly {
  cplx m0;     // R1 + R1'
  cplx m1;     // R2 - R1'
  cplx total;  // (R1 + R2) + (R1' - R1'), independent of the R1' value
};
ResidueAssembly assemble_residues(cplx r1, cplx r1_prime, cplx r2);

// C(0..4) from coefficient sequences g, delta, c (each of order >= 5).
// C(j) vanishes for j <= 3 and C(4) equals the sum of Q_j(Y, L).
std::array<double, 5> c_coefficients(double L, double Y, const std::vector<double>& g,
                                      const std::vector<double>& delta, const std::vector<double>& c);

// f1'(a) f2(a) - f1(a) f2'(a) by two routes: central differences, and the
// limit of (f1(z1) f2(z2) - f1(z2) f2(z1)) / (z1 - z2) as z1, z2 -> a.
struct LimitLemmaResult {
  cplx derivative_form;
  cplx quotient_limit;
};
LimitLemmaResult limit_lemma_check(const std::function<cplx(cplx)>& f1, const std::function<cplx(cplx)>& f2,
                                   cplx a);

struct MainTermIntegral {
  double total = 0;
  std::array<double, 5> per_degree{};
  double doubling_change = 0;  // relative change when panel nodes double
};

// sum_j int omega(t) Q_j(log K, log(t / 2 pi)) dt.  ConvergenceError if the
// node-doubling check disagrees by more than 1e-10 relative.
MainTermIntegral main_term_integral(double K, const WeightWindow& window, const QPolynomialSet& set,
                                    int panels = 8);
// The same with the indicator of [T1, T2] in place of omega.
MainTermIntegral main_term_integral_sharp(double K, double T1, double T2, const QPolynomialSet& set,
                                          int panels = 8);

// a_k = prod_p (1 - 1/p)^{k^2} sum_alpha tau_k(p^alpha)^2 p^{-alpha}, truncated
// at prime_cutoff, with the tail -C(k,2)^2 sum_{p > P} p^{-2} added.
struct EulerConstant {
  double value;
  double truncated;
  double tail_log;
  double error_estimate;
};
EulerConstant a_k_constant(int k, std::int64_t prime_cutoff);
// The local factor at p by direct summation of tau_k(p^alpha)^2 p^{-alpha}.
double a_k_local_factor(int k, std::uint64_t p);

}  // namespace dmv
