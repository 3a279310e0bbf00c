#include "dmv/zeta.hpp"

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>

#include "dmv/errors.hpp"

namespace dmv {

namespace {

// Neumaier-compensated complex accumulator.
struct CompSum {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void add(double& s, double& c, double x) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  void operator+=(cplx z) {
    add(re, cre, z.real());
    add(im, cim, z.imag());
  }
  cplx value() const { return {re + cre, im + cim}; }
};

double factorial(int j) { return boost::math::factorial<double>(unsigned(j)); }

}  // namespace

ZetaContext::ZetaContext(ZetaOptions opts) : opts_(opts) {
  if (opts_.euler_maclaurin_cutoff < 16) throw DomainError("ZetaContext: cutoff below 16");
  if (opts_.bernoulli_order < 1 || opts_.bernoulli_order > 30)
    throw DomainError("ZetaContext: bernoulli_order outside [1, 30]");
  const int nlog = std::max(opts_.euler_maclaurin_cutoff, 4096) + 1;
  logs_.resize(nlog);
  for (int n = 1; n < nlog; ++n) logs_[n] = std::log(double(n));
  for (int k = 1; k <= opts_.bernoulli_order; ++k)
    bernoulli_.push_back(boost::math::bernoulli_b2n<double>(k) / factorial(2 * k));

  const int n = opts_.euler_maclaurin_cutoff;
  const PowerSeries laurent = em_series(1.0, kModelOrder, n, true);
  gamma_.resize(kModelOrder + 1);
  for (int j = 0; j <= kModelOrder; ++j)
    gamma_[j] = ((j % 2) ? -1.0 : 1.0) * factorial(j) * laurent[j].real();

  const PowerSeries at2 = em_series(2.0, kModelOrder + 1, n, false);
  zeta2_.resize(kModelOrder + 2);
  for (int j = 0; j <= kModelOrder + 1; ++j) zeta2_[j] = at2[j].real();
  for (int j = 0; j <= 4; ++j) zeta_d2_[j] = factorial(j) * zeta2_[j];
}

int ZetaContext::adaptive_terms(cplx s) const {
  // The Bernoulli remainder behaves like (|s| / (2 pi N))^{2m+1}; N >= |s| + 32
  // keeps it below 1e-13 for m = 8.
  const double need = std::abs(s) + 32.0;
  return std::max(64, int(std::ceil(need)));
}

PowerSeries ZetaContext::em_series(cplx s0, int order, int n_terms, bool drop_pole) const {
  const int N = n_terms;
  // Explicit part: sum_{n<N} n^{-s0} (-log n)^j / j!
  std::vector<CompSum> acc(order + 1);
  for (int n = 1; n < N; ++n) {
    const double ln = log_n(n);
    cplx term = std::exp(-s0 * ln);
    acc[0] += term;
    for (int j = 1; j <= order; ++j) {
      term *= -ln / double(j);
      acc[j] += term;
    }
  }
  PowerSeries r(order);
  for (int j = 0; j <= order; ++j) r[j] = acc[j].value();

  const double lnN = log_n(N);
  // N^{-s0-e} as a series in e.
  PowerSeries Npow(order);
  {
    cplx term = std::exp(-s0 * lnN);
    for (int j = 0; j <= order; ++j) {
      Npow[j] = term;
      term *= -lnN / double(j + 1);
    }
  }

  // Integral term N^{1-s}/(s-1).
  if (drop_pole) {
    // N^{-e}/e - 1/e
    for (int j = 0; j <= order; ++j) {
      double t = 1.0;
      for (int i = 0; i <= j; ++i) t *= -lnN / double(i + 1);
      r[j] += t;
    }
  } else {
    if (std::abs(s0 - 1.0) == 0.0) throw PoleError("zeta: pole at s = 1");
    PowerSeries denom = PowerSeries::variable(s0 - 1.0, order);
    r = r + scale(convolve(Npow, reciprocal(denom)), cplx(double(N)));
  }

  // Endpoint term N^{-s}/2.
  r = r + scale(Npow, cplx(0.5));

  // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
  PowerSeries poch = PowerSeries::variable(s0, order);  // s
  double Nfac = 1.0 / double(N);                       // N^{-2k+1}
  for (std::size_t k = 1; k <= bernoulli_.size(); ++k) {
    if (k > 1) {
      poch = convolve(poch, PowerSeries::variable(s0 + double(2 * k - 3), order));
      poch = convolve(poch, PowerSeries::variable(s0 + double(2 * k - 2), order));
      Nfac /= double(N) * double(N);
    }
    r = r + scale(convolve(poch, Npow), cplx(bernoulli_[k - 1] * Nfac));
  }
  return r;
}

cplx ZetaContext::zeta(cplx s) const {
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (!(s.real() > -1.0)) throw DomainError("zeta: Re(s) <= -1 outside the Euler-Maclaurin range");
  if (std::abs(s.imag()) > 1e6) throw DomainError("zeta: |Im s| > 1e6");
  return em_series(s, 0, adaptive_terms(s), false)[0];
}

PowerSeries ZetaContext::zeta_series(cplx s0, int order) const {
  if (s0 == cplx(1.0, 0.0)) throw PoleError("zeta_series: pole at s = 1");
  if (!(s0.real() > -1.0)) throw DomainError("zeta_series: Re(s) <= -1");
  if (order < 0 || order > 20) throw UnsupportedError("zeta_series: order outside [0, 20]");
  return em_series(s0, order, adaptive_terms(s0), false);
}

double ZetaContext::zeta_deriv(int j, double s0) const {
  if (s0 != 2.0) throw UnsupportedError("zeta_deriv: only s0 = 2 is supported");
  if (j < 0 || j > 4) throw UnsupportedError("zeta_deriv: j outside [0, 4]");
  return zeta_d2_[j];
}

double ZetaContext::stieltjes(int j) const {
  if (j < 0 || j > 3) throw UnsupportedError("stieltjes: j outside [0, 3]");
  return gamma_[j];
}

double ZetaContext::g_coeff(int j) const {
  if (j < 0 || j > 4) throw UnsupportedError("g_coeff: j outside [0, 4]");
  if (j == 0) return 1.0;
  return (((j - 1) % 2) ? -1.0 : 1.0) * stieltjes(j - 1) / factorial(j - 1);
}

double ZetaContext::delta_coeff(int j) const {
  const double z0 = zeta_d2_[0], z1 = zeta_d2_[1], z2 = zeta_d2_[2], z3 = zeta_d2_[3],
               z4 = zeta_d2_[4];
  // The closed forms below are the j-th derivatives of 1/zeta(2+s) at 0;
  // dividing by j! gives the Taylor coefficient.
  switch (j) {
    case 0:
      return 1.0 / z0;
    case 1:
      return -z1 / (z0 * z0);
    case 2:
      return (2 * z1 * z1 - z0 * z2) / std::pow(z0, 3) / 2.0;
    case 3:
      return (-6 * std::pow(z1, 3) - z3 * z0 * z0 + 6 * z0 * z1 * z2) / std::pow(z0, 4) / 6.0;
    case 4:
      return (24 * std::pow(z1, 4) - z4 * std::pow(z0, 3) + 6 * z0 * z0 * z2 * z2 +
              8 * z3 * z0 * z0 * z1 - 36 * z0 * z1 * z1 * z2) /
             std::pow(z0, 5) / 24.0;
    default:
      throw UnsupportedError("delta_coeff: j outside [0, 4]");
  }
}

std::vector<double> ZetaContext::g_model() const {
  std::vector<double> g(kModelOrder + 1);
  g[0] = 1.0;
  for (int j = 1; j <= kModelOrder; ++j)
    g[j] = (((j - 1) % 2) ? -1.0 : 1.0) * gamma_[j - 1] / factorial(j - 1);
  return g;
}

std::vector<double> ZetaContext::delta_model() const {
  std::vector<cplx> z(zeta2_.begin(), zeta2_.end());
  const PowerSeries inv = reciprocal(PowerSeries(z));
  std::vector<double> d(inv.order() + 1);
  for (int j = 0; j <= inv.order(); ++j) d[j] = inv[j].real();
  return d;
}

cplx ZetaContext::entire_f(cplx s) const {
  if (std::abs(s) < taylor_radius()) {
    cplx acc = g_coeff(4);
    for (int j = 3; j >= 0; --j) acc = acc * s + g_coeff(j);
    return acc;
  }
  return s * zeta(1.0 + s);
}

cplx ZetaContext::entire_h(cplx s) const {
  if (std::abs(s) < taylor_radius()) {
    cplx acc = delta_coeff(4);
    for (int j = 3; j >= 0; --j) acc = acc * s + delta_coeff(j);
    return acc;
  }
  const cplx z = zeta(2.0 + s);
  if (z == cplx(0.0)) throw PoleError("entire_h: zeta(2+s) = 0");
  return 1.0 / z;
}

cplx ZetaContext::entire_F(cplx s) const {
  if (std::abs(s) < taylor_radius()) {
    cplx acc = 3.0 * g_coeff(4);
    for (int j = 3; j >= 0; --j) acc = acc * s + double(j - 1) * g_coeff(j);
    return acc;
  }
  const PowerSeries z = zeta_series(1.0 + s, 1);
  return s * s * z[1];
}

cplx ZetaContext::entire_H(cplx s) const {
  if (std::abs(s) < taylor_radius()) {
    cplx acc = 4.0 * delta_coeff(4);
    for (int j = 2; j >= 0; --j) acc = acc * s + double(j + 1) * delta_coeff(j + 1);
    return acc;
  }
  const PowerSeries z = zeta_series(2.0 + s, 1);
  if (z[0] == cplx(0.0)) throw PoleError("entire_H: zeta(2+s) = 0");
  return -z[1] / (z[0] * z[0]);
}

double zeta_deriv_fd(const ZetaContext& ctx, int j, double s0, double h) {
  if (j != 1 && j != 2) throw UnsupportedError("zeta_deriv_fd: j must be 1 or 2");
  auto z = [&](double s) { return ctx.zeta(cplx(s, 0.0)).real(); };
  auto d = [&](double step) {
    if (j == 1) return (z(s0 + step) - z(s0 - step)) / (2 * step);
    return (z(s0 + step) - 2 * z(s0) + z(s0 - step)) / (step * step);
  };
  // Richardson table on step halving; central differences carry only even
  // powers of the step.
  constexpr int levels = 6;
  double table[levels][levels];
  double step = h;
  for (int i = 0; i < levels; ++i, step /= 2) {
    table[i][0] = d(step);
    double f = 4.0;
    for (int k = 1; k <= i; ++k, f *= 4.0)
      table[i][k] = table[i][k - 1] + (table[i][k - 1] - table[i - 1][k - 1]) / (f - 1.0);
  }
  return table[levels - 1][levels - 1];
}

StieltjesLimit stieltjes_defining_limit(int j, long m) {
  if (j < 0 || m < 2) throw DomainError("stieltjes_defining_limit: need j >= 0, m >= 2");
  CompSum acc;
  for (long k = 1; k <= m; ++k) {
    const double lk = std::log(double(k));
    acc += cplx(std::pow(lk, j) / double(k), 0.0);
  }
  const double lm = std::log(double(m));
  const double raw = acc.value().real() - std::pow(lm, j + 1) / double(j + 1);
  const double fm = std::pow(lm, j) / double(m);
  const double bound = (std::pow(lm, j) + j * std::pow(lm, std::max(j - 1, 0))) / (6.0 * double(m) * double(m));
  return {raw - fm / 2.0, bound};
}

}  // namespace dmv
