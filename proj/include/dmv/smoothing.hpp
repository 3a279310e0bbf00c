#pragma once

// Smooth cutoff phi and weight window omega, both built from the C-infinity
// step S(x) = rho(x) / (rho(x) + rho(1-x)), rho(x) = exp(-1/x) for x > 0.
//
//   phi(t)   = 1 - S((t-1)/mu)         equal to 1 on [0,1], 0 beyond 1+mu
//   omega(t) = rise on [c1 T - T0, c1 T + T0], fall on [c2 T - T0, c2 T + T0]
//
// The window constants c1, c2 are support constants, unrelated to the
// Taylor coefficients c_j of G returned by c_coeff().

#include <complex>
#include <vector>

#include "dmv/series.hpp"

namespace dmv {

// The step S and its derivative; exact 0/1 outside (0,1).
double smooth_step(double x);
double smooth_step_prime(double x);

// Gauss-Legendre rule with n nodes on [-1, 1] (n in {4, 8, 16, 32, 64, 128}).
struct GaussRule {
  std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

class SmoothingKernel {
 public:
  // mu in (0, 1/2).  `nodes` is the Gauss-Legendre size per panel.
  explicit SmoothingKernel(double mu, int nodes = 64);

  double mu() const { return mu_; }
  int nodes() const { return nodes_; }

  double phi(double t) const;
  double phi_prime(double t) const;

  // Phi(s) = 1/s + int_1^{1+mu} phi(t) t^{s-1} dt; PoleError at s = 0.
  cplx mellin_phi(cplx s) const;
  // G(s) = -2 int phi phi' t^s dt (entire) and Phi_2(s) = G(s)/s.
  cplx g_big(cplx s) const;
  cplx phi2_mellin(cplx s) const;
  // c_j = (-2/j!) int phi phi' (log t)^j dt.
  double c_coeff(int j) const;
  // (c_0, ..., c_order) as a series.
  PowerSeries c_series(int order) const;

  // Number of panels used at imaginary part tau.
  int panels_for(double tau) const;

 private:
  struct Panelled {
    std::vector<double> u;   // log t at the nodes
    std::vector<double> wg;  // weights for G: -2 phi phi' dt
    std::vector<double> wp;  // weights for int phi t^{-1} dt
  };
  const Panelled& grid(int level) const { return grids_[level]; }

  double mu_;
  int nodes_;
  std::vector<Panelled> grids_;  // level L has 2^L panels
  std::vector<double> c_;
};

class WeightWindow {
 public:
  WeightWindow(double T, double T0, double c1 = 1.0, double c2 = 2.0, double nu = 0.0);

  double T() const { return T_; }
  double T0() const { return T0_; }
  double support_c1() const { return c1_; }
  double support_c2() const { return c2_; }
  // Exponent with T0 >= T^nu in the error analysis; carried as metadata only.
  double nu() const { return nu_; }
  double lower() const { return c1_ * T_ - T0_; }
  double upper() const { return c2_ * T_ + T0_; }

  double omega(double t) const;
  // omega_hat(u) = int omega(t) e^{-2 pi i u t} dt by panel quadrature.
  cplx omega_hat(double u) const;

 private:
  double T_, T0_, c1_, c2_, nu_;
};

}  // namespace dmv
