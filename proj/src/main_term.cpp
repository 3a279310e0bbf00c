#include "dmv/main_term.hpp"

#include <cmath>
#include <numbers>

#include "dmv/arithmetic.hpp"
#include "dmv/errors.hpp"
#include "dmv/parallel.hpp"
#include "dmv/smoothing.hpp"
#include "dmv/zeta.hpp"

namespace dmv {

void check_shift_pair(const ShiftPair& p) {
  const double tol = 1e-8;
  if (std::abs(p.a) < tol || std::abs(p.b) < tol || std::abs(p.a - p.b) < tol || std::abs(p.a + p.b) < tol)
    throw PoleError("shift pair within 1e-8 of a pole (a, b, a-b or a+b)");
  if (std::abs(p.a) > 0.05 || std::abs(p.b) > 0.05) throw DomainError("shift pair needs |a|, |b| <= 0.05");
}

// ---------------------------------------------------------------- providers

ZetaProvider::ZetaProvider(const ZetaContext& zeta, const SmoothingKernel& kernel)
    : zeta_(zeta), kernel_(kernel), g1_(zeta.g_coeff(1)), c1_(kernel.c_coeff(1)) {}

cplx ZetaProvider::f(cplx s) const { return zeta_.entire_f(s); }
cplx ZetaProvider::h(cplx s) const { return zeta_.entire_h(s); }
cplx ZetaProvider::F(cplx s) const { return zeta_.entire_F(s); }
cplx ZetaProvider::H(cplx s) const { return zeta_.entire_H(s); }
cplx ZetaProvider::G(cplx s) const { return kernel_.g_big(s); }

std::vector<double> model_c_coefficients(const SmoothingKernel& kernel) {
  std::vector<double> c;
  for (int j = 0; j <= ZetaContext::kModelOrder; ++j) c.push_back(kernel.c_coeff(j));
  // G(0) = phi(1)^2 = 1 exactly; the pole cancellation in R(a, b) needs it to the last bit.
  c[0] = 1.0;
  return c;
}

QuadTaylorProvider make_quad_provider(const ZetaContext& zeta, const SmoothingKernel& kernel) {
  return QuadTaylorProvider(zeta.g_model(), zeta.delta_model(), model_c_coefficients(kernel));
}

ResidueEvaluator::ResidueEvaluator(const ZetaContext& zeta, const SmoothingKernel& kernel, double t, double K)
    : model_(zeta, kernel), Y_(std::log(K)), L_(std::log(t / (2 * std::numbers::pi))) {
  if (!(t > 0) || !(K > 1)) throw DomainError("ResidueEvaluator needs t > 0 and K > 1");
}

cplx ResidueEvaluator::r1(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::r1(model_, p.a, p.b, Y_);
}

cplx ResidueEvaluator::r1_prime(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::r1_prime(model_, p.a, p.b, Y_);
}

cplx ResidueEvaluator::r2(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::r2(model_, p.a, p.b, Y_, L_);
}

ResidueBlocks<cplx> ResidueEvaluator::blocks(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::blocks(model_, p.a, p.b, Y_, L_);
}

KappaTable<cplx> ResidueEvaluator::kappas(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::kappas(model_, p.a, p.b, Y_, L_);
}

cplx ResidueEvaluator::r_total(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::r_total_kappa(model_, p.a, p.b, Y_, L_);
}

cplx ResidueEvaluator::r_sum(const ShiftPair& p) const {
  check_shift_pair(p);
  return residue::r1(model_, p.a, p.b, Y_) + residue::r2(model_, p.a, p.b, Y_, L_);
}

ResidueAssembly assemble_residues(cplx r1, cplx r1_prime, cplx r2) {
  ResidueAssembly out;
  out.m0 = r1 + r1_prime;
  out.m1 = r2 - r1_prime;
  out.total = (r1 + r2) + (r1_prime - r1_prime);
  return out;
}

// ---------------------------------------------------------------- C(j)

std::array<double, 5> c_coefficients(double L, double Y, const std::vector<double>& g,
                                      const std::vector<double>& delta, const std::vector<double>& c) {
  using S = BasicSeries<double>;
  const std::size_t n = std::min({g.size(), delta.size(), c.size()});
  if (n < 6) throw DomainError("c_coefficients needs series of order >= 5");
  const int N = int(n);
  auto take = [&](const std::vector<double>& v) { return S(std::vector<double>(v.begin(), v.begin() + N)); };
  const S gs = take(g), ds = take(delta), cs = take(c);
  S gp(N - 1), dp(N - 1), al(N - 1), be(N - 1);
  double fact = 1;
  for (int j = 0; j < N; ++j) {
    if (j > 0) fact *= j;
    gp[j] = double(j - 1) * gs[j];
    dp[j] = j + 1 < N ? double(j + 1) * ds[j + 1] : 0.0;
    al[j] = std::pow(L, j) / fact;
    be[j] = std::pow(Y, j) / fact;
  }
  const double X = Y - L;
  const double g1 = gs[1], Lp = X + g1 + cs[1];

  const S gd = gs * ds, gdp = gs * dp;
  const S big = gs * ds * al * alternate(cs) * alternate(be);
  const S agd = al * gp * ds;
  const S gad = gs * al * ds;
  const S agg = al * gs * gs, gg = gs * gs;
  const S w = cs * be * alternate(gs);
  auto sgn = [](int e) { return (e % 2) ? -1.0 : 1.0; };
  auto p2 = [](int e) { return std::ldexp(1.0, e); };

  auto C1 = [&](int j1, int j2, int j3) {
    const double gg12 = gs[j1] * gs[j2];
    return 0.5 * (j1 + j2 - 2) * p2(j3) * gg12 * gd[j3] - 0.25 * p2(j3) * gg12 * big[j3] -
           0.25 * sgn(j1 + j2 + j3) * p2(j3) * gg12 * agd[j3];
  };
  auto C2 = [&](int j1, int j2) {
    return 2 * ds[0] * sgn(j1) * agg[j1] * gg[j2] + sgn(j1 + j2) * (j2 - j1 - 1) * gad[0] * gs[j1] * w[j2];
  };
  auto D1 = [&](int j1, int j2, int j3) {
    const double gg12 = gs[j1] * gs[j2];
    return 0.5 * (L + 2 * g1) * p2(j3) * gg12 * gd[j3] + p2(j3) * gg12 * gdp[j3] -
           Lp / 2 * sgn(j1 + j2 + j3) * p2(j3) * gg12 * gad[j3];
  };
  auto D2 = [&](int j1, int j2) { return 2 * sgn(j1 + j2) * gad[1] * gs[j1] * w[j2]; };

  std::array<double, 5> out{};
  for (int j = 0; j <= 4; ++j) {
    double s = 0;
    for (int j1 = 0; j1 <= j; ++j1) {
      for (int j2 = 0; j2 <= j - j1; ++j2) {
        const int j3 = j - j1 - j2;
        s += C1(j1, j2, j3);
        if (j3 >= 1) s += D1(j1, j2, j3 - 1);
      }
      s += C2(j1, j - j1);
      if (j1 <= j - 1) s += D2(j1, j - 1 - j1);
    }
    out[j] = s;
  }
  return out;
}

// ---------------------------------------------------------------- limit lemma

namespace {

// Richardson extrapolation in h^2 of q(h) for h = h0, h0/2, ...
cplx richardson_even(const std::function<cplx(double)>& q, double h0, int levels) {
  std::vector<std::vector<cplx>> T(levels);
  double h = h0;
  for (int i = 0; i < levels; ++i, h /= 2) {
    T[i].push_back(q(h));
    double f = 4;
    for (int k = 1; k <= i; ++k, f *= 4) T[i].push_back(T[i][k - 1] + (T[i][k - 1] - T[i - 1][k - 1]) / (f - 1));
  }
  return T.back().back();
}

}  // namespace

LimitLemmaResult limit_lemma_check(const std::function<cplx(cplx)>& f1, const std::function<cplx(cplx)>& f2,
                                   cplx a) {
  const double h0 = 1e-2;
  const int levels = 5;
  auto d = [&](const std::function<cplx(cplx)>& f) {
    return richardson_even([&](double h) { return (f(a + h) - f(a - h)) / (2 * h); }, h0, levels);
  };
  LimitLemmaResult r;
  r.derivative_form = d(f1) * f2(a) - f1(a) * d(f2);
  r.quotient_limit = richardson_even(
      [&](double h) {
        const cplx z1 = a + h, z2 = a - h;
        return (f1(z1) * f2(z2) - f1(z2) * f2(z1)) / (z1 - z2);
      },
      h0, levels);
  return r;
}

// ---------------------------------------------------------------- integrated main term

namespace {

using Weight = std::function<double(double)>;

// Per-degree integrals of w(t) Q_j over the given pieces, `panels` GL-32
// panels per piece.
std::array<double, 5> integrate_pieces(double K, const std::vector<std::pair<double, double>>& pieces,
                                       const Weight& w, const QPolynomialSet& set, int panels) {
  const GaussRule& rule = gauss_legendre(32);
  const double x = std::log(K);
  std::array<double, 5> out{};
  for (const auto& [lo, hi] : pieces) {
    if (!(hi > lo)) continue;
    const double width = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = lo + (p + 0.5) * width, half = width / 2;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double t = mid + half * rule.x[i];
        const double wt = rule.w[i] * half * w(t);
        const double y = std::log(t / (2 * std::numbers::pi));
        for (int j = 0; j <= 4; ++j) out[j] += wt * set.eval(j, x, y);
      }
    }
  }
  return out;
}

MainTermIntegral integrate_checked(double K, const std::vector<std::pair<double, double>>& pieces,
                                   const Weight& w, const QPolynomialSet& set, int panels) {
  if (!(K > 1)) throw DomainError("main_term_integral needs K > 1");
  if (panels < 1) throw DomainError("main_term_integral needs panels >= 1");
  const auto coarse = integrate_pieces(K, pieces, w, set, panels);
  const auto fine = integrate_pieces(K, pieces, w, set, 2 * panels);
  MainTermIntegral r;
  double tc = 0, scale = 0;
  for (int j = 0; j <= 4; ++j) {
    r.per_degree[j] = fine[j];
    r.total += fine[j];
    tc += coarse[j];
    scale += std::abs(fine[j]);
  }
  r.doubling_change = std::abs(r.total - tc) / std::max(scale, 1e-300);
  if (r.doubling_change > 1e-10)
    throw ConvergenceError("main_term_integral: node doubling changed the result by " +
                           std::to_string(r.doubling_change));
  return r;
}

}  // namespace

MainTermIntegral main_term_integral(double K, const WeightWindow& window, const QPolynomialSet& set,
                                    int panels) {
  const double T = window.T(), T0 = window.T0();
  const double a = window.support_c1() * T, b = window.support_c2() * T;
  if (!(window.lower() > 0)) throw DomainError("main_term_integral needs positive window support");
  const std::vector<std::pair<double, double>> pieces = {{a - T0, a + T0}, {a + T0, b - T0}, {b - T0, b + T0}};
  return integrate_checked(K, pieces, [&](double t) { return window.omega(t); }, set, panels);
}

MainTermIntegral main_term_integral_sharp(double K, double T1, double T2, const QPolynomialSet& set,
                                          int panels) {
  if (!(T1 > 0 && T2 > T1)) throw DomainError("main_term_integral_sharp needs 0 < T1 < T2");
  return integrate_checked(K, {{T1, T2}}, [](double) { return 1.0; }, set, panels);
}

// ---------------------------------------------------------------- a_k

namespace {

double binom_d(int n, int r) {
  double b = 1;
  for (int i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

// log of the local factor, with the sum kept as 1 + (rest) for accuracy at large p.
double log_local(int k, std::uint64_t p) {
  const double q = 1.0 / double(p);
  double rest = 0, qa = 1;
  for (int alpha = 1; alpha < 2000; ++alpha) {
    qa *= q;
    const double tk = binom_d(alpha + k - 1, k - 1);
    const double term = tk * tk * qa;
    rest += term;
    if (term < 1e-18 * (1 + rest) && alpha > 2) break;
  }
  return double(k * k) * std::log1p(-q) + std::log1p(rest);
}

}  // namespace

double a_k_local_factor(int k, std::uint64_t p) {
  if (k < 1 || p < 2) throw DomainError("a_k_local_factor needs k >= 1 and p >= 2");
  return std::exp(log_local(k, p));
}

EulerConstant a_k_constant(int k, std::int64_t prime_cutoff) {
  if (k != 2 && k != 3) throw UnsupportedError("a_k_constant supports k in {2, 3}");
  if (prime_cutoff < 2 || prime_cutoff > 10000000) throw DomainError("a_k_constant cutoff must lie in [2, 1e7]");
  const auto primes = primes_up_to(std::uint64_t(prime_cutoff));
  const double log_trunc =
      chunked_sum<double>(primes.size(), 1024, [&](std::size_t i) { return log_local(k, primes[i]); });
  const double logP = std::log(double(prime_cutoff));
  const double c2 = binom_d(k, 2) * binom_d(k, 2);
  const double e1 = std::real(expint_e1(cplx(logP, 0.0)));
  EulerConstant r;
  r.truncated = std::exp(log_trunc);
  r.tail_log = -c2 * e1;
  r.value = std::exp(log_trunc + r.tail_log);
  r.error_estimate = r.value * (0.05 * c2 * e1 + std::pow(double(k), 6) / (2.0 * double(prime_cutoff) *
                                                                          double(prime_cutoff) * logP));
  return r;
}

}  // namespace dmv
