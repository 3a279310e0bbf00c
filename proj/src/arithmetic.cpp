#include "dmv/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dmv/errors.hpp"
#include "dmv/parallel.hpp"
#include "dmv/zeta.hpp"

namespace dmv {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// Successive h_m(x_1..x_k), m = 0, 1, 2, ...  cur_[i] holds h_m of the first
// i variables.
class HomogeneousStream {
 public:
  explicit HomogeneousStream(std::vector<cplx> x) : x_(std::move(x)), cur_(x_.size() + 1, 1.0) {}
  cplx value() const { return cur_.back(); }
  void advance() {
    cplx prev = 0.0;
    for (std::size_t i = 1; i < cur_.size(); ++i) {
      cur_[i] = prev + x_[i - 1] * cur_[i];
      prev = cur_[i];
    }
    cur_[0] = 0.0;
  }

 private:
  std::vector<cplx> x_;
  std::vector<cplx> cur_;
};

std::vector<cplx> local_variables(const ShiftSet& A, double logp) {
  std::vector<cplx> x(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) x[i] = std::exp(-A[i] * logp);
  return x;
}

double max_abs(const std::vector<cplx>& x) {
  double m = 0;
  for (const auto& v : x) m = std::max(m, std::abs(v));
  return m;
}

// binom(n + k - 1, k - 1): bound on the number of monomials in h_n of k variables.
double monomials(int n, int k) {
  double b = 1;
  for (int i = 1; i < k; ++i) b = b * double(n + i) / double(i);
  return b;
}

constexpr int kMaxLocalTerms = 20000;

// sum_j h_{j+e}(y) x^j to relative tolerance tol.
cplx shifted_local_series(const std::vector<cplx>& y, cplx x, int e, double tol) {
  const int k = int(y.size());
  const double M = max_abs(y);
  const double r = M * std::abs(x);
  if (r >= 1.0) throw ConvergenceError("g_A local series diverges: |p^{-s-a}| >= 1");
  HomogeneousStream h(y);
  for (int m = 0; m < e; ++m) h.advance();
  cplx sum = 0.0, xp = 1.0;
  for (int j = 0; j < kMaxLocalTerms; ++j) {
    sum += h.value() * xp;
    xp *= x;
    h.advance();
    // Tail after j: terms j+1.. bounded by monomials(n) M^n |x|^{n-e}.
    const int n = j + e + 1;
    const double growth = double(n + k) / double(n + 1);
    if (r * growth < 1.0) {
      const double lead = monomials(n, k) * std::pow(M, n) * std::pow(std::abs(x), n - e);
      if (lead / (1.0 - r * growth) <= tol * std::abs(sum)) return sum;
    }
  }
  throw ConvergenceError("g_A local series did not reach tolerance");
}

cplx g_local(const ShiftSet& A, cplx s, std::uint64_t p, int e) {
  if (e == 0) return 1.0;
  const double logp = std::log(double(p));
  const auto y = local_variables(A, logp);
  const cplx x = std::exp(-s * logp);
  cplx den = 1.0;
  for (const auto& yi : y) {
    if (std::abs(yi * x) >= 1.0) throw ConvergenceError("g_A local series diverges: |p^{-s-a}| >= 1");
    den *= 1.0 - yi * x;
  }
  // den is the reciprocal of sum_j h_j(y) x^j.
  return shifted_local_series(y, x, e, 1e-12) * den;
}

std::vector<std::uint32_t> smallest_prime_factor(std::int64_t N) {
  std::vector<std::uint32_t> spf(std::size_t(N) + 1, 0);
  for (std::int64_t i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    for (std::int64_t j = i; j <= N; j += i)
      if (spf[j] == 0) spf[j] = std::uint32_t(i);
  }
  return spf;
}

}  // namespace

// ---------------------------------------------------------------- ShiftSet

ShiftSet::ShiftSet(std::initializer_list<cplx> shifts) : ShiftSet(std::vector<cplx>(shifts), true) {}
ShiftSet::ShiftSet(std::vector<cplx> shifts) : ShiftSet(std::move(shifts), true) {}

ShiftSet::ShiftSet(std::vector<cplx> shifts, bool check) : a_(std::move(shifts)) {
  if (a_.empty()) throw DomainError("shift set must be non-empty");
  if (!check) return;
  for (const auto& a : a_)
    if (std::abs(a.real()) > kMaxRealPart)
      throw DomainError("shift real part outside [-0.6, 0.6]: " + std::to_string(a.real()));
}

cplx ShiftSet::sum() const { return std::accumulate(a_.begin(), a_.end(), cplx(0.0)); }

double ShiftSet::min_real() const {
  double m = a_[0].real();
  for (const auto& a : a_) m = std::min(m, a.real());
  return m;
}

double ShiftSet::max_real() const {
  double m = a_[0].real();
  for (const auto& a : a_) m = std::max(m, a.real());
  return m;
}

ShiftSet ShiftSet::plus(cplx xi) const {
  std::vector<cplx> b = a_;
  for (auto& v : b) v += xi;
  return ShiftSet(std::move(b), false);
}

ShiftSet ShiftSet::conj() const {
  std::vector<cplx> b = a_;
  for (auto& v : b) v = std::conj(v);
  return ShiftSet(std::move(b), false);
}

// ---------------------------------------------------------------- integers

DivisorTable tau_sieve(int k, std::int64_t N) {
  if (k < 1 || N < 1) throw DomainError("tau_sieve needs k >= 1 and N >= 1");
  if (N > (std::int64_t(1) << 31)) throw CapacityError("tau_sieve table too large");
  DivisorTable t;
  t.k = k;
  t.N = N;
  t.values.assign(std::size_t(N) + 1, 1);
  t.values[0] = 0;
  std::vector<std::uint64_t> next(t.values.size());
  const std::size_t segments = std::min<std::size_t>(4 * std::size_t(worker_count()), std::size_t(N));
  const std::int64_t seg = (N + std::int64_t(segments) - 1) / std::int64_t(segments);
  for (int step = 1; step < k; ++step) {
    // next[m] = sum_{d | m} values[d], computed independently per segment.
    parallel_for(segments, [&](std::size_t s) {
      const std::int64_t lo = 1 + std::int64_t(s) * seg, hi = std::min(N, lo + seg - 1);
      if (lo > hi) return;
      for (std::int64_t m = lo; m <= hi; ++m) next[m] = 0;
      for (std::int64_t d = 1; d <= hi; ++d) {
        const std::uint64_t v = t.values[d];
        for (std::int64_t m = ((lo + d - 1) / d) * d; m <= hi; m += d)
          if (__builtin_add_overflow(next[m], v, &next[m]))
            throw CapacityError("tau_k value exceeds 64 bits");
      }
    });
    next[0] = 0;
    t.values.swap(next);
  }
  return t;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  if (n > 4000000000ULL) throw CapacityError("prime sieve limit too large");
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(std::uint32_t(i));
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize(0)");
  std::vector<PrimePower> f;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    f.push_back({p, e});
  }
  if (n > 1) f.push_back({n, 1});
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> d{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = d.size();
    std::uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

int mobius(std::uint64_t n) {
  int m = 1;
  for (const auto& f : factorize(n)) {
    if (f.e > 1) return 0;
    m = -m;
  }
  return m;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = n;
  for (const auto& f : factorize(n)) r = r / f.p * (f.p - 1);
  return r;
}

std::int64_t ramanujan_sum(std::int64_t q, std::int64_t r) {
  if (q < 1) throw DomainError("ramanujan_sum needs q >= 1");
  if (r == 0) throw DomainError("ramanujan_sum needs r != 0");
  const std::uint64_t g = std::gcd(std::uint64_t(q), std::uint64_t(r < 0 ? -r : r));
  std::int64_t c = 0;
  for (auto d : divisors(g)) c += std::int64_t(d) * mobius(std::uint64_t(q) / d);
  return c;
}

// ---------------------------------------------------------------- shifted divisor functions

std::vector<cplx> complete_homogeneous(const std::vector<cplx>& x, int max_degree) {
  std::vector<cplx> h;
  HomogeneousStream s(x);
  for (int m = 0; m <= max_degree; ++m, s.advance()) h.push_back(s.value());
  return h;
}

cplx sigma_shifted(const ShiftSet& I, std::uint64_t n) {
  if (n == 0) throw DomainError("sigma_shifted needs n >= 1");
  cplx v = 1.0;
  for (const auto& [p, e] : factorize(n))
    v *= complete_homogeneous(local_variables(I, std::log(double(p))), e)[e];
  return v;
}

std::vector<cplx> sigma_table(const ShiftSet& I, std::int64_t N) {
  if (N < 1) throw DomainError("sigma_table needs N >= 1");
  if (N > 200000000) throw CapacityError("sigma_table limit too large");
  const auto spf = smallest_prime_factor(N);
  std::vector<cplx> s(std::size_t(N) + 1, 0.0);
  s[1] = 1.0;
  for (std::int64_t n = 2; n <= N; ++n) {
    const std::uint64_t p = spf[n];
    std::int64_t m = n, pe = 1;
    int e = 0;
    while (m % std::int64_t(p) == 0) m /= std::int64_t(p), pe *= std::int64_t(p), ++e;
    if (m > 1) {
      s[n] = s[pe] * s[m];
    } else {
      s[n] = complete_homogeneous(local_variables(I, std::log(double(p))), e)[e];
    }
  }
  return s;
}

// ---------------------------------------------------------------- g_A, G_A

cplx g_mult(const ShiftSet& A, cplx s, std::uint64_t n) {
  if (n == 0) throw DomainError("g_mult needs n >= 1");
  cplx v = 1.0;
  for (const auto& [p, e] : factorize(n)) v *= g_local(A, s, p, e);
  return v;
}

cplx G_mult(const ShiftSet& A, cplx s, std::uint64_t n) {
  if (n == 0) throw DomainError("G_mult needs n >= 1");
  cplx total = 0.0;
  for (auto d : divisors(n)) {
    const int md = mobius(d);
    if (md == 0) continue;
    cplx inner = 0.0;
    for (auto e : divisors(d)) {
      const int me = mobius(e);
      if (me == 0) continue;
      inner += double(me) * std::pow(double(e), -s) * g_mult(A, s, n * e / d);
    }
    total += double(md) * std::pow(double(d), s) / double(euler_phi(d)) * inner;
  }
  return total;
}

cplx G_mult_local(const ShiftSet& A, cplx s, std::uint64_t n) {
  if (n == 0) throw DomainError("G_mult needs n >= 1");
  cplx v = 1.0;
  for (const auto& [p, k] : factorize(n)) {
    const double pd = double(p);
    v *= (pd * g_local(A, s, p, k) - std::pow(pd, s) * g_local(A, s, p, k - 1)) / (pd - 1.0);
  }
  return v;
}

// ---------------------------------------------------------------- Euler products

cplx euler_Z(const ZetaContext& zeta, const ShiftSet& I, const ShiftSet& J) {
  cplx v = 1.0;
  for (const auto& a : I.shifts())
    for (const auto& b : J.shifts()) {
      if (std::abs(a + b) < 1e-14) throw PoleError("euler_Z: a_i + b_j = 0");
      v *= zeta.zeta(1.0 + a + b);
    }
  return v;
}

EulerAEvaluator::EulerAEvaluator(std::int64_t prime_cutoff) : cutoff_(prime_cutoff) {
  if (prime_cutoff < 2) throw DomainError("euler_A prime cutoff must be >= 2");
  if (prime_cutoff > 10000000) throw CapacityError("euler_A prime cutoff above 1e7");
  primes_ = primes_up_to(std::uint64_t(prime_cutoff));
}

cplx EulerAEvaluator::log_local_factor(const ShiftSet& I, const ShiftSet& J, std::uint64_t p) const {
  const double logp = std::log(double(p));
  const double q = 1.0 / double(p);
  const auto x = local_variables(I, logp);
  const auto y = local_variables(J, logp);
  const int k = int(x.size()), l = int(y.size());
  const double r = max_abs(x) * max_abs(y) * q;
  cplx pre = 0.0;
  for (const auto& xi : x)
    for (const auto& yj : y) pre += std::log(1.0 - xi * yj * q);
  HomogeneousStream hx(x), hy(y);
  cplx sum = 0.0, qu = 1.0;
  for (int u = 0; u < kMaxLocalTerms; ++u) {
    sum += hx.value() * hy.value() * qu;
    qu *= q;
    hx.advance();
    hy.advance();
    const int n = u + 1;
    const double growth = double(n + k) / double(n + 1) * double(n + l) / double(n + 1);
    if (r * growth < 1.0) {
      const double lead = monomials(n, k) * monomials(n, l) * std::pow(r, n);
      if (lead / (1.0 - r * growth) <= 1e-13 * std::abs(sum)) return pre + std::log(sum);
    }
  }
  throw ConvergenceError("euler_A local series did not reach tolerance");
}

EulerProduct EulerAEvaluator::operator()(const ShiftSet& I, const ShiftSet& J, bool add_tail) const {
  double min_pair = 1e300;
  for (const auto& a : I.shifts())
    for (const auto& b : J.shifts()) min_pair = std::min(min_pair, (a + b).real());
  if (min_pair <= -0.4) throw ConvergenceError("euler_A needs Re(a_i + b_j) > -0.4");

  const cplx log_trunc = chunked_sum<cplx>(primes_.size(), 256, [&](std::size_t i) {
    return log_local_factor(I, J, primes_[i]);
  });

  const double logP = std::log(double(cutoff_));
  cplx tail = 0.0;
  double err = 0.0;
  const auto& a = I.shifts();
  const auto& b = J.shifts();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t i2 = i + 1; i2 < a.size(); ++i2)
      for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t j2 = j + 1; j2 < b.size(); ++j2) {
          const cplx w1 = 1.0 + a[i] + a[i2] + b[j] + b[j2];
          tail -= expint_e1(w1 * logP);
          // The logarithmic-integral stand-in is good to a few percent for a
          // real exponent; oscillation in Im(w) erodes that, capped at the
          // size of the sum itself.
          const double size = std::abs(expint_e1(cplx(w1.real(), 0.0) * logP));
          err += size * std::min(1.0, 0.05 * (1.0 + std::abs(w1.imag()) * logP));
        }
  // Third-order terms of the local factors, p^{-3 - 3 m}.
  const double kl = double(a.size() * b.size());
  const double third = 2.0 + 3.0 * min_pair;
  err += kl * kl * kl * std::pow(double(cutoff_), -third) / (third * logP);

  EulerProduct out;
  out.truncated = std::exp(log_trunc);
  out.tail_log = tail;
  out.tail_added = add_tail;
  out.value = add_tail ? std::exp(log_trunc + tail) : out.truncated;
  out.error_estimate = err;
  out.prime_cutoff = cutoff_;
  return out;
}

EulerProduct euler_A(const ShiftSet& I, const ShiftSet& J, std::int64_t prime_cutoff, bool add_tail) {
  return EulerAEvaluator(prime_cutoff)(I, J, add_tail);
}

PartialSum series_B(const ShiftSet& I, const ShiftSet& J, std::int64_t N) {
  const double sigma = I.min_real() + J.min_real();
  if (sigma <= 0) throw ConvergenceError("series_B needs min Re(a) + min Re(b) > 0");
  const auto sI = sigma_table(I, N);
  const auto sJ = sigma_table(J, N);
  PartialSum out;
  out.N = N;
  out.value = chunked_sum<cplx>(std::size_t(N), 4096, [&](std::size_t i) {
    const std::size_t n = i + 1;
    return sI[n] * sJ[n] / double(n);
  });
  // sum_{n>N} tau_k(n) tau_l(n) n^{-1-sigma} is about (log N)^{kl-1} N^{-sigma}/sigma.
  const double kl = double(I.size() * J.size());
  out.tail_bound = std::pow(std::log(double(N)), kl - 1.0) * std::pow(double(N), -sigma) / sigma;
  return out;
}

cplx expint_e1(cplx z) {
  if (std::abs(z) <= 1.0) {
    if (z == 0.0) throw PoleError("E1(0)");
    cplx sum = 0.0, term = 1.0;
    for (int k = 1; k < 60; ++k) {
      term *= -z / double(k);
      sum += term / double(k);
      if (std::abs(term) < 1e-18) break;
    }
    return -kEulerGamma - std::log(z) - sum;
  }
  if (z.real() <= 0) throw DomainError("expint_e1 continued fraction needs Re z > 0");
  // Modified Lentz on e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - ...))).
  const double tiny = 1e-300;
  cplx b = z + 1.0, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -double(i) * double(i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const cplx del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h * std::exp(-z);
  }
  throw ConvergenceError("expint_e1 continued fraction");
}

}  // namespace dmv
