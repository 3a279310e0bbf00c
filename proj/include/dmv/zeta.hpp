#pragma once

// Riemann zeta by Euler-Maclaurin, evaluated with a power-series valued
// argument so that derivatives at 2 and the Laurent data at 1 come out of
// the same summation as plain values.
//
// Validated region for zeta(): Re(s) in [-1/2, 3] with |Im s| <= 1e3, plus
// real s in (1, 4].  Absolute error there is about 1e-12.

#include <array>
#include <cmath>
#include <vector>

#include "dmv/series.hpp"

namespace dmv {

struct ZetaOptions {
  int euler_maclaurin_cutoff = 10000;  // terms summed for derivative / Laurent data
  int bernoulli_order = 8;             // number of B_{2k} correction terms
};

class ZetaContext {
 public:
  // Order of the internally cached Taylor / Laurent expansions.
  static constexpr int kModelOrder = 10;

  explicit ZetaContext(ZetaOptions opts = {});

  const ZetaOptions& options() const { return opts_; }

  // zeta(s).  Throws PoleError at s = 1, DomainError for Re(s) <= -1 or
  // |Im s| > 1e6.  The number of summed terms grows with |s|.
  cplx zeta(cplx s) const;

  // Taylor coefficients zeta^{(j)}(s0)/j!, j <= order.
  PowerSeries zeta_series(cplx s0, int order) const;

  // zeta^{(j)}(2) for 0 <= j <= 4; other (j, s0) raise UnsupportedError.
  double zeta_deriv(int j, double s0 = 2.0) const;

  // Stieltjes constant gamma_j, 0 <= j <= 3.
  double stieltjes(int j) const;

  // f(s) = s zeta(1+s) = sum g_j s^j; g_j available for 0 <= j <= 4.
  double g_coeff(int j) const;
  // h(s) = 1/zeta(2+s) = sum delta_j s^j, 0 <= j <= 4, from the closed
  // forms in zeta^{(i)}(2).
  double delta_coeff(int j) const;

  // Entire functions built from zeta.  Inside |s| < taylor_radius() the
  // Taylor polynomials in g_j, delta_j (degree 4) are used instead.
  cplx entire_f(cplx s) const;  // s zeta(1+s)
  cplx entire_h(cplx s) const;  // 1/zeta(2+s)
  cplx entire_F(cplx s) const;  // s f'(s) - f(s) = s^2 zeta'(1+s)
  cplx entire_H(cplx s) const;  // h'(s) = -zeta'(2+s)/zeta(2+s)^2
  static constexpr double taylor_radius() { return 1e-3; }

  // Uncapped model coefficients up to kModelOrder, used for polynomial
  // stand-ins of f and h.  Entries beyond index 4 rely on gamma_j, j > 3,
  // and the corresponding zeta derivatives, accurate to roughly 1e-9
  // relative.
  std::vector<double> g_model() const;
  std::vector<double> delta_model() const;
  std::vector<double> stieltjes_model() const { return gamma_; }

 private:
  // Euler-Maclaurin for zeta(s0 + e) as a series in e, with n_terms summed
  // explicitly.  When drop_pole is set and s0 = 1, returns zeta(1+e) - 1/e.
  PowerSeries em_series(cplx s0, int order, int n_terms, bool drop_pole) const;
  int adaptive_terms(cplx s) const;
  double log_n(int n) const { return n < int(logs_.size()) ? logs_[n] : std::log(double(n)); }

  ZetaOptions opts_;
  std::vector<double> logs_;
  std::vector<double> bernoulli_;  // B_{2k}/(2k)!, k = 1..bernoulli_order
  std::vector<double> gamma_;      // Stieltjes constants, 0..kModelOrder
  std::vector<double> zeta2_;      // zeta^{(j)}(2)/j!, 0..kModelOrder+1
  std::array<double, 5> zeta_d2_{};  // zeta^{(j)}(2), 0..4
};

// Richardson-extrapolated central differences of ctx.zeta along the real
// axis.  Independent of the series machinery; j in {1, 2}.
double zeta_deriv_fd(const ZetaContext& ctx, int j, double s0, double h = 0.05);

// gamma_j from the defining limit at m with the first Euler-Maclaurin
// correction, plus a bound on what remains.
struct StieltjesLimit {
  double value;
  double tail_bound;
};
StieltjesLimit stieltjes_defining_limit(int j, long m);

}  // namespace dmv
