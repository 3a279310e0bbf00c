#pragma once

// Divisor functions, shifted divisor functions and the Euler products
//
//   Z(I,J) = prod_{i,j} zeta(1 + a_i + b_j)
//   A(I,J) = prod_p prod_{i,j} (1 - p^{-1-a_i-b_j}) sum_u sigma_I(p^u) sigma_J(p^u) p^{-u}
//   B(I,J) = sum_n sigma_I(n) sigma_J(n) / n = A(I,J) Z(I,J).

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dmv/series.hpp"

namespace dmv {

class ZetaContext;

class ShiftSet {
 public:
  static constexpr double kMaxRealPart = 0.6;

  ShiftSet(std::initializer_list<cplx> shifts);
  explicit ShiftSet(std::vector<cplx> shifts);

  std::size_t size() const { return a_.size(); }
  const cplx& operator[](std::size_t i) const { return a_[i]; }
  const std::vector<cplx>& shifts() const { return a_; }
  cplx sum() const;
  double min_real() const;
  double max_real() const;

  // Every shift moved by xi.  The validity window is not re-checked, so that
  // contour points with Re(xi) up to the line abscissa stay representable.
  ShiftSet plus(cplx xi) const;
  ShiftSet conj() const;

 private:
  ShiftSet(std::vector<cplx> shifts, bool check);
  std::vector<cplx> a_;
};

struct DivisorTable {
  int k = 0;
  std::int64_t N = 0;
  std::vector<std::uint64_t> values;  // values[n] = tau_k(n), values[0] unused

  std::uint64_t operator[](std::int64_t n) const { return values[std::size_t(n)]; }
};

// tau_k(n) for n <= N by k-1 Dirichlet convolutions with 1.  CapacityError
// if any value could exceed 64 bits or the table would exceed 2^31 entries.
DivisorTable tau_sieve(int k, std::int64_t N);

std::vector<std::uint32_t> primes_up_to(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  int e;
};
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

// h_m(x_1, ..., x_k), the complete homogeneous symmetric polynomials, for
// m = 0..max_degree.
std::vector<cplx> complete_homogeneous(const std::vector<cplx>& x, int max_degree);

// sigma_I(n) = sum_{d_1...d_k = n} d_1^{-a_1} ... d_k^{-a_k}, via the
// factorization of n and sigma_I(p^e) = h_e(p^{-a_1}, ..., p^{-a_k}).
cplx sigma_shifted(const ShiftSet& I, std::uint64_t n);
// sigma_I(n) for all n <= N (entry 0 unused), smallest-prime-factor sieve.
std::vector<cplx> sigma_table(const ShiftSet& I, std::int64_t N);

// c_q(r) = sum_{d | (q, r)} d mu(q/d).  r may be negative.
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t r);

// g_A(s, n) = prod_{p^e || n} [sum_j sigma_A(p^{j+e}) p^{-js}] / [sum_j sigma_A(p^j) p^{-js}].
cplx g_mult(const ShiftSet& A, cplx s, std::uint64_t n);
// G_A(s, n) as the literal double divisor sum over d | n, e | d.
cplx G_mult(const ShiftSet& A, cplx s, std::uint64_t n);
// G_A(s, n) as a product of local factors
//   G_A(s, p^k) = (p g_A(s, p^k) - p^s g_A(s, p^{k-1})) / (p - 1).
cplx G_mult_local(const ShiftSet& A, cplx s, std::uint64_t n);

// PoleError if some a_i + b_j vanishes.
cplx euler_Z(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J);

// Truncated Euler product for A and its tail estimate.  Beyond the cutoff P
// the local factors are 1 - sum_{i<i', j<j'} p^{-w} + O(p^{-3+eps}) with
// w = 2 + a_i + a_i' + b_j + b_j', and sum_{p>P} p^{-w} is replaced by the
// logarithmic integral E_1((w-1) log P).
struct EulerProduct {
  cplx value;       // truncated * exp(tail_log) if tail_added, else truncated
  cplx truncated;   // product over p <= prime_cutoff
  cplx tail_log;    // estimated log of the remaining factors
  double error_estimate;
  bool tail_added;
  std::int64_t prime_cutoff;
};

// Prime and logarithm tables for repeated evaluation of A at one cutoff.
class EulerAEvaluator {
 public:
  explicit EulerAEvaluator(std::int64_t prime_cutoff);

  // ConvergenceError unless Re(a_i + b_j) > -0.4 for all pairs.
  EulerProduct operator()(const ShiftSet& I, const ShiftSet& J, bool add_tail = true) const;
  // log of the local factor at p.
  cplx log_local_factor(const ShiftSet& I, const ShiftSet& J, std::uint64_t p) const;

  std::int64_t cutoff() const { return cutoff_; }

 private:
  std::int64_t cutoff_;
  std::vector<std::uint32_t> primes_;
};

EulerProduct euler_A(const ShiftSet& I, const ShiftSet& J, std::int64_t prime_cutoff,
                     bool add_tail = true);

struct PartialSum {
  cplx value;
  double tail_bound;
  std::int64_t N;
};

// sum_{n <= N} sigma_I(n) sigma_J(n) / n with a tail bound from the
// abscissa min Re(a) + min Re(b) > 0; ConvergenceError otherwise.
PartialSum series_B(const ShiftSet& I, const ShiftSet& J, std::int64_t N);

// E_1(z) for Re z > 0 or |z| < 1.
cplx expint_e1(cplx z);

}  // namespace dmv
