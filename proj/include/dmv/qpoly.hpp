#pragma once

// The degree-j polynomials Q_j(x, y), x = log K, y = log(t / 2 pi), whose sum
// is the main term of the smoothed fourth moment of the divisor-weighted
// Dirichlet polynomial, and the Conrey-Gonek objects gamma_k(n), w_k, a_k.

#include <array>
#include <cstdint>
#include <vector>

namespace dmv {

class ZetaContext;
class SmoothingKernel;

// Q_j as monomial tables: coefficients(j)[i] multiplies x^{j-i} y^i.
class QPolynomialSet {
 public:
  // g, delta, c need at least 5 entries (indices 0..4); c[0] is ignored.
  QPolynomialSet(std::vector<double> g, std::vector<double> delta, std::vector<double> c);
  // Arbitrary tables, for tests of the quadrature paths.
  explicit QPolynomialSet(std::array<std::vector<double>, 5> tables);

  static QPolynomialSet from(const ZetaContext& zeta, const SmoothingKernel& kernel);

  const std::vector<double>& coefficients(int j) const;
  double eval(int j, double x, double y) const;
  double total(double x, double y) const;

  const std::vector<double>& g() const { return g_; }
  const std::vector<double>& delta() const { return delta_; }
  const std::vector<double>& c() const { return c_; }

 private:
  std::vector<double> g_, delta_, c_;
  std::array<std::vector<double>, 5> q_;
};

double q_poly(const QPolynomialSet& set, int j, double x, double y);

// Q_j, j <= 3, in the alternative form written with gamma, gamma_1..gamma_3,
// zeta^{(i)}(2), pi and c_1..c_4 (c[0] ignored, at least 5 entries).
std::vector<double> q_gamma_form_coefficients(int j, const ZetaContext& zeta,
                                              const std::vector<double>& c);
double q_poly_gamma_form(int j, double x, double y, const std::vector<double>& c,
                         const ZetaContext& zeta);

// gamma_k(n) = sum_{i,j<=k} C(k,i) C(k,j) C(n-1, i+j-2) C(i+j-2, j-1), gamma_k(0) = k.
std::int64_t gamma_kn(int k, int n);
// Coefficients of w_k as a polynomial in x, constant term first (k in {2, 3}).
std::vector<double> w_k_coefficients(int k);
double w_k(int k, double x);

}  // namespace dmv
