#include "dmv/smoothing.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <numbers>

#include "dmv/errors.hpp"

namespace dmv {

namespace {

constexpr int kMaxLevel = 10;          // up to 1024 panels on [1, 1+mu]
constexpr double kPhasePerPanel = 8.0;  // radians of t^{i tau} per 64-node panel

template <int N>
GaussRule expand_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  GaussRule r;
  for (std::size_t i = a.size(); i-- > 0;) {
    r.x.push_back(-a[i]);
    r.w.push_back(w[i]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    r.x.push_back(a[i]);
    r.w.push_back(w[i]);
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static const GaussRule r4 = expand_rule<4>();
  static const GaussRule r8 = expand_rule<8>();
  static const GaussRule r16 = expand_rule<16>();
  static const GaussRule r32 = expand_rule<32>();
  static const GaussRule r64 = expand_rule<64>();
  static const GaussRule r128 = expand_rule<128>();
  switch (n) {
    case 4:
      return r4;
    case 8:
      return r8;
    case 16:
      return r16;
    case 32:
      return r32;
    case 64:
      return r64;
    case 128:
      return r128;
    default:
      throw UnsupportedError("gauss_legendre: n must be one of 4, 8, 16, 32, 64, 128");
  }
}

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  return a / (a + b);
}

double smooth_step_prime(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double a = std::exp(-1.0 / x);
  const double b = std::exp(-1.0 / (1.0 - x));
  const double s = a + b;
  return a * b * (1.0 / (x * x) + 1.0 / ((1.0 - x) * (1.0 - x))) / (s * s);
}

SmoothingKernel::SmoothingKernel(double mu, int nodes) : mu_(mu), nodes_(nodes) {
  if (!(mu > 0.0 && mu < 0.5)) throw DomainError("SmoothingKernel: mu must lie in (0, 1/2)");
  const GaussRule& rule = gauss_legendre(nodes);
  grids_.resize(kMaxLevel + 1);
  for (int level = 0; level <= kMaxLevel; ++level) {
    const int panels = 1 << level;
    Panelled& g = grids_[level];
    const double h = mu_ / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = 1.0 + p * h;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double t = lo + 0.5 * h * (rule.x[i] + 1.0);
        const double w = 0.5 * h * rule.w[i];
        g.u.push_back(std::log(t));
        g.wg.push_back(-2.0 * phi(t) * phi_prime(t) * w);
        g.wp.push_back(phi(t) / t * w);
      }
    }
  }
  const Panelled& g0 = grid(0);
  c_.resize(17);
  for (int j = 0; j < 17; ++j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g0.u.size(); ++k) acc += g0.wg[k] * std::pow(g0.u[k], j);
    c_[j] = acc / boost::math::factorial<double>(unsigned(j));
  }
  c_[0] = 1.0;  // G(0) = phi(1)^2 - phi(1+mu)^2
}

double SmoothingKernel::phi(double t) const { return 1.0 - smooth_step((t - 1.0) / mu_); }

double SmoothingKernel::phi_prime(double t) const { return -smooth_step_prime((t - 1.0) / mu_) / mu_; }

int SmoothingKernel::panels_for(double tau) const {
  const double phase = std::abs(tau) * std::log1p(mu_);
  const int need = std::max(1, int(std::ceil(phase / kPhasePerPanel)));
  int level = 0;
  while ((1 << level) < need) ++level;
  if (level > kMaxLevel) throw DomainError("SmoothingKernel: |Im s| beyond the cached quadrature grids");
  return 1 << level;
}

namespace {
int level_of(int panels) {
  int level = 0;
  while ((1 << level) < panels) ++level;
  return level;
}
}  // namespace

cplx SmoothingKernel::g_big(cplx s) const {
  const Panelled& g = grid(level_of(panels_for(s.imag())));
  cplx acc = 0.0;
  for (std::size_t k = 0; k < g.u.size(); ++k) acc += g.wg[k] * std::exp(s * g.u[k]);
  return acc;
}

cplx SmoothingKernel::phi2_mellin(cplx s) const {
  if (s == cplx(0.0)) throw PoleError("phi2_mellin: pole at s = 0");
  return g_big(s) / s;
}

cplx SmoothingKernel::mellin_phi(cplx s) const {
  if (s == cplx(0.0)) throw PoleError("mellin_phi: pole at s = 0");
  const Panelled& g = grid(level_of(panels_for(s.imag())));
  cplx acc = 0.0;
  for (std::size_t k = 0; k < g.u.size(); ++k) acc += g.wp[k] * std::exp(s * g.u[k]);
  return 1.0 / s + acc;
}

double SmoothingKernel::c_coeff(int j) const {
  if (j < 0 || j >= int(c_.size())) throw UnsupportedError("c_coeff: j outside [0, 16]");
  return c_[j];
}

PowerSeries SmoothingKernel::c_series(int order) const {
  PowerSeries r(order);
  for (int j = 0; j <= order; ++j) r[j] = c_coeff(j);
  return r;
}

WeightWindow::WeightWindow(double T, double T0, double c1, double c2, double nu)
    : T_(T), T0_(T0), c1_(c1), c2_(c2), nu_(nu) {
  if (!(T > 0 && T0 > 0)) throw DomainError("WeightWindow: T and T0 must be positive");
  if (!(c1 > 0 && c2 > c1)) throw DomainError("WeightWindow: need 0 < c1 < c2");
  if (c1 * T - T0 < 0) throw DomainError("WeightWindow: c1 T - T0 must be non-negative");
  if (2 * T0 > (c2 - c1) * T) throw DomainError("WeightWindow: transitions overlap (2 T0 > (c2 - c1) T)");
}

double WeightWindow::omega(double t) const {
  const double up = smooth_step((t - (c1_ * T_ - T0_)) / (2 * T0_));
  const double down = 1.0 - smooth_step((t - (c2_ * T_ - T0_)) / (2 * T0_));
  return up * down;
}

cplx WeightWindow::omega_hat(double u) const {
  const double two_pi = 2.0 * std::numbers::pi;
  const GaussRule& rule = gauss_legendre(64);
  const double phase = two_pi * std::abs(u) * 2 * T0_;
  const int panels = std::max(1, int(std::ceil(phase / kPhasePerPanel)));
  auto transition = [&](double a) {
    cplx acc = 0.0;
    const double h = 2 * T0_ / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = a + p * h;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        const double t = lo + 0.5 * h * (rule.x[i] + 1.0);
        acc += 0.5 * h * rule.w[i] * omega(t) * std::exp(cplx(0.0, -two_pi * u * t));
      }
    }
    return acc;
  };
  // Plateau in closed form.
  const double a = c1_ * T_ + T0_, b = c2_ * T_ - T0_;
  cplx plateau;
  if (u == 0.0) {
    plateau = b - a;
  } else {
    const cplx k(0.0, -two_pi * u);
    plateau = (std::exp(k * b) - std::exp(k * a)) / k;
  }
  return transition(c1_ * T_ - T0_) + plateau + transition(c2_ * T_ - T0_);
}

}  // namespace dmv
