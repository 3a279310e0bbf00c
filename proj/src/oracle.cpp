#include "dmv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "dmv/errors.hpp"
#include "dmv/main_term.hpp"
#include "dmv/parallel.hpp"
#include "dmv/qpoly.hpp"
#include "dmv/zeta.hpp"

namespace dmv {

double MomentExperiment::K() const { return std::pow(T, 1.0 + eta); }

// ---------------------------------------------------------------- Dirichlet polynomials

DirichletPolynomial::DirichletPolynomial(const std::vector<cplx>& coeffs, double K, const SmoothingKernel& kernel) {
  build(coeffs, K, kernel);
}

DirichletPolynomial::DirichletPolynomial(const DivisorTable& table, double K, const SmoothingKernel& kernel) {
  std::vector<cplx> c(table.values.size());
  for (std::size_t n = 1; n < c.size(); ++n) c[n] = double(table.values[n]);
  build(c, K, kernel);
}

void DirichletPolynomial::build(const std::vector<cplx>& coeffs, double K, const SmoothingKernel& kernel) {
  if (!(K >= 1)) throw DomainError("Dirichlet polynomial needs K >= 1");
  const auto N = std::int64_t(std::floor((1.0 + kernel.mu()) * K));
  if (std::int64_t(coeffs.size()) <= N)
    throw DomainError("coefficient table shorter than (1 + mu) K = " + std::to_string(N));
  for (std::int64_t n = 1; n <= N; ++n) {
    const double ph = kernel.phi(double(n) / K);
    if (ph == 0.0) continue;
    logn_.push_back(std::log(double(n)));
    weight_.push_back(coeffs[std::size_t(n)] * (ph / std::sqrt(double(n))));
  }
}

cplx DirichletPolynomial::operator()(double t) const {
  double re = 0, im = 0;
  for (std::size_t i = 0; i < logn_.size(); ++i) {
    const double ph = t * logn_[i];
    const double c = std::cos(ph), s = std::sin(ph);
    const cplx& w = weight_[i];
    // w (c - i s)
    re += w.real() * c + w.imag() * s;
    im += w.imag() * c - w.real() * s;
  }
  return {re, im};
}

cplx DirichletPolynomial::conjugate_side(double t) const {
  cplx acc = 0.0;
  for (std::size_t i = 0; i < logn_.size(); ++i) acc += weight_[i] * std::polar(1.0, t * logn_[i]);
  return acc;
}

// ---------------------------------------------------------------- moment quadrature

namespace {

struct NodeGrid {
  std::vector<double> t, w;
};

NodeGrid window_nodes(const WeightWindow& window, double K, int per_panel) {
  const GaussRule& rule = gauss_legendre(per_panel);
  const double lo = window.lower(), hi = window.upper();
  const double scale = 2 * std::numbers::pi / std::log(K);
  const auto panels = std::int64_t(std::ceil((hi - lo) / scale));
  const double h = (hi - lo) / double(panels);
  NodeGrid g;
  for (std::int64_t p = 0; p < panels; ++p) {
    const double mid = lo + (double(p) + 0.5) * h;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      const double t = mid + 0.5 * h * rule.x[i];
      g.t.push_back(t);
      g.w.push_back(0.5 * h * rule.w[i] * window.omega(t));
    }
  }
  return g;
}

void check_experiment(const MomentExperiment& exp) {
  if (!(exp.T > 0) || !(exp.eta > 0 && exp.eta < 1)) throw DomainError("moment experiment needs T > 0, eta in (0, 1)");
  if (exp.oversample < 4) throw DomainError("oversample must be >= 4");
  const int o = exp.oversample;
  if (o != 4 && o != 8 && o != 16 && o != 32 && o != 64)
    throw UnsupportedError("oversample must be one of 4, 8, 16, 32, 64");
}

void check_budget(const MomentExperiment& exp, std::int64_t terms) {
  const WeightWindow window = exp.window();
  const double scale = 2 * std::numbers::pi / std::log(exp.K());
  const double panels = std::ceil((window.upper() - window.lower()) / scale);
  const double work = double(terms) * panels * 3.0 * exp.oversample;
  if (work > exp.budget)
    throw BudgetError("moment experiment work " + std::to_string(work) + " exceeds budget " +
                      std::to_string(exp.budget));
}

template <class Integrand>
MomentResult integrate_window(const MomentExperiment& exp, Integrand&& integrand, std::int64_t terms,
                              std::ostream* dump) {
  const WeightWindow window = exp.window();
  const double K = exp.K();
  MomentResult r;
  r.K = K;
  r.terms = terms;
  r.omega_hat0 = window.omega_hat(0.0).real();
  cplx pass[2];
  for (int k = 0; k < 2; ++k) {
    const NodeGrid g = window_nodes(window, K, exp.oversample * (k + 1));
    std::vector<cplx> vals(g.t.size());
    pass[k] = chunked_sum<cplx>(g.t.size(), std::size_t(exp.oversample), [&](std::size_t i) {
      vals[i] = integrand(g.t[i]);
      return g.w[i] * vals[i];
    });
    if (k == 1) {
      r.nodes = std::int64_t(g.t.size());
      if (dump) {
        *dump << "t,abs_A_sq,omega\n";
        dump->precision(17);
        for (std::size_t i = 0; i < g.t.size(); ++i)
          *dump << g.t[i] << ',' << vals[i].real() << ',' << window.omega(g.t[i]) << '\n';
      }
    }
  }
  r.value = pass[1].real();
  r.coarse = pass[0].real();
  r.imag_part = pass[1].imag();
  r.doubling_change = std::abs(r.value - r.coarse) / std::max(std::abs(r.value), 1e-300);
  if (r.doubling_change > exp.tolerance)
    throw ConvergenceError("moment quadrature: node doubling changed the result by " +
                           std::to_string(r.doubling_change));
  return r;
}

}  // namespace

MomentResult moment_numeric(const MomentExperiment& exp, const DivisorTable& table, std::ostream* dump) {
  check_experiment(exp);
  const SmoothingKernel kernel = exp.kernel();
  const DirichletPolynomial A(table, exp.K(), kernel);
  check_budget(exp, A.length());
  return integrate_window(
      exp, [&](double t) { return cplx(std::norm(A(t)), 0.0); }, A.length(), dump);
}

MomentResult moment_numeric(const MomentExperiment& exp, std::ostream* dump) {
  check_experiment(exp);
  const auto N = std::int64_t(std::floor((1.0 + exp.mu) * exp.K()));
  return moment_numeric(exp, tau_sieve(2, N + 1), dump);
}

MomentResult moment_numeric_shifted(const MomentExperiment& exp, const ShiftSet& I, const ShiftSet& J) {
  check_experiment(exp);
  const SmoothingKernel kernel = exp.kernel();
  const auto N = std::int64_t(std::floor((1.0 + exp.mu) * exp.K())) + 1;
  const DirichletPolynomial A(sigma_table(I, N), exp.K(), kernel);
  const DirichletPolynomial B(sigma_table(J, N), exp.K(), kernel);
  check_budget(exp, 2 * A.length());
  return integrate_window(
      exp, [&](double t) { return A(t) * B.conjugate_side(t); }, A.length(), nullptr);
}

double conrey_gonek_prediction(int k, double T, double eta, std::int64_t prime_cutoff) {
  if (k != 2) throw UnsupportedError("conrey_gonek_prediction validated for k = 2 only");
  if (!(eta > 0 && eta < 1) || !(T > 1)) throw DomainError("conrey_gonek_prediction needs T > 1, eta in (0, 1)");
  const double ak = a_k_constant(k, prime_cutoff).value;
  const double k2 = double(k * k);
  return ak / std::tgamma(k2 + 1.0) * w_k(k, 1.0 + eta) * T * std::pow(std::log(T), k2);
}

// ---------------------------------------------------------------- additive divisor sums

ADTestFunction::ADTestFunction(double X, double Y, ADProfile profile, double transition)
    : X_(X), Y_(Y), profile_(profile), tr_(transition), P_(1.0) {
  if (!(X > 0.5 && Y > 0.5)) throw DomainError("ADTestFunction needs X, Y > 1/2");
  if (!(transition > 0 && transition <= 0.5)) throw DomainError("ADTestFunction transition must lie in (0, 1/2]");
  if (profile_ == ADProfile::Smooth) {
    for (int i = 0; i <= 4000; ++i) {
      const double xi = 1.0 + i / 4000.0;
      P_ = std::max(P_, xi * std::abs(du(xi)));
    }
  }
}

double ADTestFunction::u(double xi) const {
  if (profile_ == ADProfile::Box) return (xi >= 1.0 && xi <= 2.0) ? 1.0 : 0.0;
  return smooth_step((xi - 1.0) / tr_) * smooth_step((2.0 - xi) / tr_);
}

double ADTestFunction::du(double xi) const {
  if (profile_ == ADProfile::Box) return 0.0;
  return smooth_step_prime((xi - 1.0) / tr_) / tr_ * smooth_step((2.0 - xi) / tr_) -
         smooth_step((xi - 1.0) / tr_) * smooth_step_prime((2.0 - xi) / tr_) / tr_;
}

double ADTestFunction::operator()(double x, double y) const { return u(x / X_) * u(y / Y_); }

std::vector<double> ADTestFunction::breakpoints(std::int64_t r) const {
  std::vector<double> b;
  for (double xi : {1.0, 1.0 + tr_, 2.0 - tr_, 2.0}) {
    b.push_back(xi * X_);
    b.push_back(xi * Y_ + double(r));
  }
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

namespace {

void check_r(const ADTestFunction& F, std::int64_t r) {
  if (r == 0) throw DomainError("shift r must be non-zero");
  if (double(r < 0 ? -r : r) > F.X() / 10) throw DomainError("|r| must not exceed X / 10");
}

}  // namespace

cplx ad_sum_bruteforce(const ShiftSet& I, const ShiftSet& J, const ADTestFunction& F, std::int64_t r) {
  check_r(F, r);
  const auto n_lo = std::max<std::int64_t>(1, std::int64_t(std::ceil(F.Y())));
  const auto n_hi = std::int64_t(std::floor(2 * F.Y()));
  if (n_hi - n_lo + 1 > 10000000) throw BudgetError("ad_sum_bruteforce: more than 1e7 terms");
  if (n_hi < n_lo) return 0.0;
  const std::int64_t M = std::max<std::int64_t>(std::int64_t(std::floor(2 * F.X())), n_hi + std::abs(r)) + 1;
  const auto sI = sigma_table(I, M);
  const auto sJ = sigma_table(J, M);
  const auto count = std::size_t(n_hi - n_lo + 1);
  return chunked_sum<cplx>(count, 8192, [&](std::size_t i) -> cplx {
    const std::int64_t n = n_lo + std::int64_t(i), m = n + r;
    if (m < 1) return 0.0;
    const double w = F(double(m), double(n));
    if (w == 0.0) return 0.0;
    return sI[std::size_t(m)] * sJ[std::size_t(n)] * w;
  });
}

std::uint64_t ad_sum_integer(std::int64_t X, std::int64_t Y, std::int64_t r) {
  if (X < 1 || Y < 1 || r == 0) throw DomainError("ad_sum_integer needs X, Y >= 1 and r != 0");
  const std::int64_t M = std::max(2 * X, 2 * Y + std::abs(r)) + 1;
  const DivisorTable d = tau_sieve(2, M);
  std::uint64_t s = 0;
  for (std::int64_t n = Y; n <= 2 * Y; ++n) {
    const std::int64_t m = n + r;
    if (m < X || m > 2 * X) continue;
    s += d[m] * d[n];
  }
  return s;
}

namespace {

// int F(x, x - r) x^{-a} (x - r)^{-b} dx over the support, GL-32 per panel.
cplx ad_integral(const ADTestFunction& F, std::int64_t r, cplx a, cplx b, int panels) {
  const GaussRule& rule = gauss_legendre(32);
  const auto bp = F.breakpoints(r);
  const double lo_all = std::max(0.0, double(r));
  cplx total = 0.0;
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    const double lo = std::max(bp[k], lo_all), hi = bp[k + 1];
    if (!(hi > lo)) continue;
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * h;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double x = mid + 0.5 * h * rule.x[i], y = x - double(r);
        if (y <= 0) continue;
        const double w = F(x, y);
        if (w == 0.0) continue;
        total += 0.5 * h * rule.w[i] * w * std::exp(-a * std::log(x) - b * std::log(y));
      }
    }
  }
  return total;
}

std::vector<cplx> G_table(const ShiftSet& A, cplx s, std::int64_t Q) {
  std::vector<cplx> g(std::size_t(Q) + 1, 0.0);
  parallel_for(std::size_t(Q), [&](std::size_t i) { g[i + 1] = G_mult_local(A, s, std::uint64_t(i + 1)); });
  return g;
}

}  // namespace

ADMainTerm ad_main_term(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J, const ADTestFunction& F,
                        std::int64_t r, std::int64_t q_cutoff) {
  check_r(F, r);
  if (q_cutoff < 2) throw DomainError("q_cutoff must be >= 2");
  for (const auto* S : {&I, &J})
    for (std::size_t i = 0; i < S->size(); ++i)
      for (std::size_t j = i + 1; j < S->size(); ++j)
        if (std::abs((*S)[i] - (*S)[j]) < 1e-8) throw PoleError("ad_main_term needs distinct shifts");

  std::vector<std::int64_t> cq(std::size_t(q_cutoff) + 1, 0);
  for (std::int64_t q = 1; q <= q_cutoff; ++q) cq[std::size_t(q)] = ramanujan_sum(q, r);

  ADMainTerm out{0.0, 0.0, q_cutoff};
  for (std::size_t i1 = 0; i1 < I.size(); ++i1) {
    const cplx a = I[i1];
    cplx zi = 1.0;
    for (std::size_t j1 = 0; j1 < I.size(); ++j1)
      if (j1 != i1) zi *= zeta.zeta(1.0 - a + I[j1]);
    const auto GI = G_table(I, 1.0 - a, q_cutoff);
    for (std::size_t i2 = 0; i2 < J.size(); ++i2) {
      const cplx b = J[i2];
      cplx zj = 1.0;
      for (std::size_t j2 = 0; j2 < J.size(); ++j2)
        if (j2 != i2) zj *= zeta.zeta(1.0 - b + J[j2]);
      const auto GJ = G_table(J, 1.0 - b, q_cutoff);
      const double sigma = (a + b).real();
      cplx series = 0.0;
      double M = 0;
      for (std::int64_t q = 1; q <= q_cutoff; ++q) {
        if (cq[std::size_t(q)] == 0) continue;
        const double lq = std::log(double(q));
        const cplx term = double(cq[std::size_t(q)]) * GI[std::size_t(q)] * GJ[std::size_t(q)] *
                          std::exp(-(2.0 - a - b) * lq);
        series += term;
        if (2 * q > q_cutoff) M = std::max(M, std::abs(term) * std::exp((2.0 - sigma) * lq));
      }
      const cplx integral = ad_integral(F, r, a, b, 8);
      const cplx check = ad_integral(F, r, a, b, 16);
      if (std::abs(integral - check) > 1e-10 * std::abs(check))
        throw ConvergenceError("ad_main_term: x-integral did not converge");
      const cplx pre = zi * zj * check;
      out.value += pre * series;
      out.tail_estimate += std::abs(pre) * M * std::pow(double(q_cutoff), sigma - 1.0) / (1.0 - sigma);
    }
  }
  return out;
}

}  // namespace dmv
