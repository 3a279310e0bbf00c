#pragma once

// The diagonal main term
//
//   M0 = omega_hat(0) / (2 pi i) int_{(c)} K^s Phi_2(s) B(I + s, J) ds
//      = omega_hat(0) sum_n sigma_I(n) sigma_J(n) phi(n/K)^2 / n
//
// evaluated on a vertical line with B = A Z, and as the finite sum.

#include <cstdint>

#include "dmv/arithmetic.hpp"

namespace dmv {

class ZetaContext;
class SmoothingKernel;
class WeightWindow;

struct ContourOptions {
  int gauss_nodes = 32;          // Gauss-Legendre nodes per unit of Im s
  std::int64_t prime_cutoff = 10000;
  double tail_tolerance = 1e-6;  // relative; above it the truncation is refused
};

struct ContourResult {
  cplx value;            // M0
  cplx per_unit_mass;    // M0 / omega_hat(0)
  double tail_estimate;  // relative size of the integrand mass near |Im s| = truncation
  double euler_error;    // largest relative error estimate reported by euler_A
  std::int64_t nodes;
};

// ConvergenceError when the tail estimate exceeds options.tail_tolerance.
ContourResult m0_contour(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J, double K,
                         const SmoothingKernel& kernel, const WeightWindow& window, double line_re,
                         double truncation, const ContourOptions& options = {});

// sum_{n <= (1 + mu) K} sigma_I(n) sigma_J(n) phi(n/K)^2 / n.
cplx m0_diagonal_sum(const ShiftSet& I, const ShiftSet& J, double K, const SmoothingKernel& kernel);

}  // namespace dmv
