#include "dmv/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dmv/errors.hpp"
#include "dmv/parallel.hpp"
#include "dmv/smoothing.hpp"
#include "dmv/zeta.hpp"

namespace dmv {

namespace {

bool all_real(const ShiftSet& S) {
  for (const auto& a : S.shifts())
    if (a.imag() != 0.0) return false;
  return true;
}

}  // namespace

ContourResult m0_contour(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J, double K,
                         const SmoothingKernel& kernel, const WeightWindow& window, double line_re,
                         double truncation, const ContourOptions& options) {
  if (!(K > 1)) throw DomainError("m0_contour needs K > 1");
  if (!(truncation > 0)) throw DomainError("m0_contour needs a positive truncation");
  // Poles of the integrand sit at s = 0 and s = -a_i - b_j.
  for (const auto& a : I.shifts())
    for (const auto& b : J.shifts())
      if (!(line_re + (a + b).real() > 0))
        throw DomainError("m0_contour line must lie right of every pole -a_i - b_j");
  if (!(line_re > 0)) throw DomainError("m0_contour line must lie right of s = 0");

  const EulerAEvaluator euler(options.prime_cutoff);
  const GaussRule& rule = gauss_legendre(options.gauss_nodes);
  const double logK = std::log(K);
  // Real shifts make the integrand conjugate-symmetric in Im s.
  const bool symmetric = all_real(I) && all_real(J);
  const double lo = symmetric ? 0.0 : -truncation;
  const int panels = int(std::ceil(truncation - lo));
  const double width = (truncation - lo) / panels;
  const std::size_t n = std::size_t(panels) * rule.x.size();

  std::vector<double> worst_euler(std::size_t(panels), 0.0);
  auto integrand = [&](std::size_t idx) -> cplx {
    const std::size_t p = idx / rule.x.size(), i = idx % rule.x.size();
    const double tau = lo + (double(p) + 0.5) * width + 0.5 * width * rule.x[i];
    const cplx s(line_re, tau);
    const ShiftSet Is = I.plus(s);
    const EulerProduct A = euler(Is, J);
    worst_euler[p] = std::max(worst_euler[p], A.error_estimate);
    const cplx B = A.value * euler_Z(zeta, Is, J);
    return 0.5 * width * rule.w[i] * std::exp(s * logK) * kernel.phi2_mellin(s) * B;
  };
  // Weighted node values, kept for the tail estimate.
  std::vector<cplx> vals(n);
  const cplx sum = chunked_sum<cplx>(n, rule.x.size(), [&](std::size_t idx) { return vals[idx] = integrand(idx); });

  // ds = i dtau, so (1 / 2 pi i) int ... ds = (1 / 2 pi) int ... dtau.
  const cplx per_unit = symmetric ? cplx(sum.real() / std::numbers::pi, 0.0) : sum / (2 * std::numbers::pi);

  // Mass of the last 5% of the range, relative to the total.
  double edge = 0;
  const std::size_t edge_start = n - std::max<std::size_t>(rule.x.size(), n / 20);
  for (std::size_t i = edge_start; i < n; ++i) edge += std::abs(vals[i]);
  ContourResult r;
  r.per_unit_mass = per_unit;
  r.value = window.omega_hat(0.0) * per_unit;
  r.tail_estimate = edge / std::max(std::abs(sum), 1e-300);
  r.euler_error = *std::max_element(worst_euler.begin(), worst_euler.end());
  r.nodes = std::int64_t(n);
  if (r.tail_estimate > options.tail_tolerance)
    throw ConvergenceError("m0_contour: truncation too short, tail estimate " + std::to_string(r.tail_estimate));
  return r;
}

cplx m0_diagonal_sum(const ShiftSet& I, const ShiftSet& J, double K, const SmoothingKernel& kernel) {
  if (!(K >= 1)) throw DomainError("m0_diagonal_sum needs K >= 1");
  const auto N = std::int64_t(std::floor((1.0 + kernel.mu()) * K));
  const auto sI = sigma_table(I, N);
  const auto sJ = sigma_table(J, N);
  return chunked_sum<cplx>(std::size_t(N), 4096, [&](std::size_t i) {
    const std::size_t n = i + 1;
    const double ph = kernel.phi(double(n) / K);
    return sI[n] * sJ[n] * (ph * ph / double(n));
  });
}

}  // namespace dmv
