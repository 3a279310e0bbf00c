#pragma once

// Brute-force counterparts of the main terms: the smoothed mean value of the
// divisor-weighted Dirichlet polynomial by direct quadrature in t, and
// shifted convolution sums by direct summation.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dmv/arithmetic.hpp"
#include "dmv/smoothing.hpp"

namespace dmv {

class ZetaContext;

struct MomentExperiment {
  double T = 4000;
  double eta = 0.2;  // K = T^{1 + eta}
  double mu = 0.1;
  double T0 = 0;     // 0 selects T / 4
  double c1 = 1.0, c2 = 2.0;
  int oversample = 8;         // Gauss-Legendre nodes per panel of width 2 pi / log K
  double budget = 1e10;       // refuse when K (1 + mu) times total nodes exceeds this
  double tolerance = 1e-3;    // node-doubling tolerance, relative

  double K() const;
  double window_T0() const { return T0 > 0 ? T0 : T / 4; }
  WeightWindow window() const { return WeightWindow(T, window_T0(), c1, c2); }
  SmoothingKernel kernel() const { return SmoothingKernel(mu); }
};

// sum_{n <= (1 + mu) K} a(n) n^{-1/2} phi(n/K) n^{-it} with a(n) given for
// n = 1..N (index 0 unused).  The sign argument selects n^{-it} (+1) or
// n^{+it} (-1).
class DirichletPolynomial {
 public:
  DirichletPolynomial(const std::vector<cplx>& coeffs, double K, const SmoothingKernel& kernel);
  DirichletPolynomial(const DivisorTable& table, double K, const SmoothingKernel& kernel);

  cplx operator()(double t) const;            // A(1/2 + it)
  cplx conjugate_side(double t) const;        // A(1/2 - it), evaluated separately
  std::int64_t length() const { return std::int64_t(logn_.size()); }

 private:
  void build(const std::vector<cplx>& coeffs, double K, const SmoothingKernel& kernel);
  std::vector<double> logn_;
  std::vector<cplx> weight_;  // a(n) n^{-1/2} phi(n/K)
};

struct MomentResult {
  double value = 0;            // int omega |A|^2 dt (fine pass)
  double coarse = 0;           // the pass with half the nodes
  double imag_part = 0;        // imaginary part of the accumulated integrand
  double doubling_change = 0;  // |value - coarse| / |value|
  std::int64_t nodes = 0;      // fine-pass nodes
  std::int64_t terms = 0;      // Dirichlet polynomial length
  double K = 0;
  double omega_hat0 = 0;
};

// int omega(t) |sum tau_2(n) n^{-1/2-it} phi(n/K)|^2 dt.  BudgetError if the
// work estimate exceeds exp.budget; ConvergenceError if node doubling moves
// the result by more than exp.tolerance.  With dump set, writes
// "t,abs_A_sq,omega" rows for the fine pass.
MomentResult moment_numeric(const MomentExperiment& exp, const DivisorTable& table, std::ostream* dump = nullptr);
MomentResult moment_numeric(const MomentExperiment& exp, std::ostream* dump = nullptr);

// int omega(t) A_I(1/2 + it) A_J(1/2 - it) dt with sigma_I, sigma_J
// coefficients, the second factor coded through conjugate_side().
MomentResult moment_numeric_shifted(const MomentExperiment& exp, const ShiftSet& I, const ShiftSet& J);

// Leading-order prediction (a_k / (k^2)!) w_k(1 + eta) T (log T)^{k^2}.
double conrey_gonek_prediction(int k, double T, double eta, std::int64_t prime_cutoff = 1000000);

enum class ADProfile { Smooth, Box };

// F(x, y) = u(x / X) v(y / Y) supported in [X, 2X] x [Y, 2Y].  The smooth
// profile rises and falls over a fraction `transition` of [1, 2]; the box
// profile is the indicator of the closed box.
class ADTestFunction {
 public:
  // Hughes-Young exponents for k = l = 2, carried as metadata.
  static constexpr double kTheta = 0.75, kC = 1.25, kBeta = 1.0;

  ADTestFunction(double X, double Y, ADProfile profile = ADProfile::Smooth, double transition = 0.25);

  double operator()(double x, double y) const;
  double X() const { return X_; }
  double Y() const { return Y_; }
  ADProfile profile() const { return profile_; }
  double transition() const { return tr_; }
  // max of x |dF/dx| and y |dF/dy| over a sample grid (at least 1).
  double P() const { return P_; }
  // Points where F(x, x - r) may fail to be smooth, in increasing order.
  std::vector<double> breakpoints(std::int64_t r) const;

 private:
  double u(double xi) const;
  double du(double xi) const;
  double X_, Y_;
  ADProfile profile_;
  double tr_;
  double P_;
};

// sum_{m - n = r} sigma_I(m) sigma_J(n) F(m, n).  BudgetError above 1e7 terms;
// DomainError unless 1 <= |r| <= X / 10.
cplx ad_sum_bruteforce(const ShiftSet& I, const ShiftSet& J, const ADTestFunction& F, std::int64_t r);
// sum d(n + r) d(n) over the box in exact integer arithmetic.
std::uint64_t ad_sum_integer(std::int64_t X, std::int64_t Y, std::int64_t r);

struct ADMainTerm {
  cplx value;
  double tail_estimate;  // absolute
  std::int64_t q_cutoff;
};

// The conjectured main term with the q-series truncated at q_cutoff.
// PoleError when two shifts in I (or in J) coincide.
ADMainTerm ad_main_term(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J, const ADTestFunction& F,
                        std::int64_t r, std::int64_t q_cutoff = 10000);

}  // namespace dmv
