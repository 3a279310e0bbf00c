#include "dmv/qpoly.hpp"

#include <cmath>
#include <numbers>

#include "dmv/errors.hpp"
#include "dmv/smoothing.hpp"
#include "dmv/zeta.hpp"

namespace dmv {

namespace {

double eval_table(const std::vector<double>& q, double x, double y) {
  const int j = int(q.size()) - 1;
  double v = 0;
  for (int i = 0; i <= j; ++i) v += q[i] * std::pow(x, j - i) * std::pow(y, i);
  return v;
}

void check_j(int j, int max) {
  if (j < 0 || j > max) throw UnsupportedError("Q_j index out of range: " + std::to_string(j));
}

std::int64_t binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  std::int64_t b = 1;
  for (std::int64_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

}  // namespace

QPolynomialSet::QPolynomialSet(std::vector<double> g, std::vector<double> delta, std::vector<double> c)
    : g_(std::move(g)), delta_(std::move(delta)), c_(std::move(c)) {
  if (g_.size() < 5 || delta_.size() < 5 || c_.size() < 5)
    throw DomainError("QPolynomialSet needs g, delta, c through index 4");
  const double d0 = delta_[0], d1 = delta_[1], d2 = delta_[2], d3 = delta_[3], d4 = delta_[4];
  const double g1 = g_[1], g2 = g_[2], g3 = g_[3], g4 = g_[4];
  const double c1 = c_[1], c2 = c_[2], c3 = c_[3], c4 = c_[4];

  q_[4] = {-d0 / 24, 8 * d0 / 24, -24 * d0 / 24, 32 * d0 / 24, -14 * d0 / 24};

  q_[3] = {2 * d0 * g1 / 3 + d1 / 3 - c1 * d0 / 6,
           -4 * d0 * g1 - 2 * d1 + c1 * d0,
           8 * d0 * g1 + 4 * d1 - 2 * c1 * d0,
           -4 * d0 * g1 - 2 * d1 + 4 * c1 * d0 / 3};

  q_[2] = {-2 * d0 * g2 - 3 * d0 * g1 * g1 - 4 * d1 * g1 - 2 * d2 + 2 * c1 * d0 * g1 + c1 * d1 - c2 * d0 / 2,
           8 * d0 * g2 + 12 * d0 * g1 * g1 + 16 * d1 * g1 + 8 * d2 - 8 * c1 * d0 * g1 - 4 * c1 * d1 + 2 * c2 * d0,
           -5 * d0 * g1 * g1 - 4 * d2 - 6 * d0 * g2 - 8 * d1 * g1 + 8 * c1 * d0 * g1 + 4 * c1 * d1 - 2 * c2 * d0};

  const double g1s = g1 * g1, g1c = g1s * g1;
  q_[1] = {4 * d0 * g3 + 12 * d0 * g1 * g2 + 4 * d0 * g1c + 8 * d1 * g2 + 12 * d1 * g1s + 16 * d2 * g1 + 8 * d3
               - 4 * c1 * d0 * g2 - 6 * c1 * d0 * g1s - 8 * c1 * d1 * g1 - 4 * c1 * d2 + 4 * c2 * d0 * g1
               + 2 * c2 * d1 - c3 * d0,
           -12 * d0 * g3 - 4 * d0 * g1 * g2 - 8 * d1 * g2 + 4 * d1 * g1s + 4 * d0 * g1c + 8 * c1 * d0 * g2
               + 12 * c1 * d0 * g1s + 16 * c1 * d1 * g1 + 8 * c1 * d2 - 8 * c2 * d0 * g1 - 4 * c2 * d1
               + 2 * c3 * d0};

  q_[0] = {16 * d4 - 16 * d1 * g3 + 32 * d3 * g1 + 32 * g1s * d2 - 24 * d0 * g4 + 8 * g2 * g2 * d0
           + 5 * d0 * g1s * g1s + 16 * d1 * g1c - 8 * d0 * g1 * g3 + 16 * d1 * g1 * g2 + 12 * d0 * g1s * g2
           + 12 * g1s * d1 * c1 + 12 * d0 * g1 * g2 * c1 + 8 * d3 * c1 + 4 * d0 * g1c * c1 + 4 * d0 * g3 * c1
           + 8 * d1 * g2 * c1 + 16 * g1 * d2 * c1 - 4 * d2 * c2 - 6 * g1s * d0 * c2 - 4 * d0 * g2 * c2
           - 8 * g1 * d1 * c2 + 4 * g1 * d0 * c3 + 2 * d1 * c3 - d0 * c4};
}

QPolynomialSet::QPolynomialSet(std::array<std::vector<double>, 5> tables) : q_(std::move(tables)) {
  for (int j = 0; j <= 4; ++j)
    if (int(q_[j].size()) != j + 1) throw DomainError("Q_j table must have j + 1 entries");
}

QPolynomialSet QPolynomialSet::from(const ZetaContext& zeta, const SmoothingKernel& kernel) {
  std::vector<double> g, d, c;
  for (int j = 0; j <= 4; ++j) {
    g.push_back(zeta.g_coeff(j));
    d.push_back(zeta.delta_coeff(j));
    c.push_back(kernel.c_coeff(j));
  }
  return QPolynomialSet(g, d, c);
}

const std::vector<double>& QPolynomialSet::coefficients(int j) const {
  check_j(j, 4);
  return q_[j];
}

double QPolynomialSet::eval(int j, double x, double y) const { return eval_table(coefficients(j), x, y); }

double QPolynomialSet::total(double x, double y) const {
  double v = 0;
  for (int j = 0; j <= 4; ++j) v += eval(j, x, y);
  return v;
}

double q_poly(const QPolynomialSet& set, int j, double x, double y) { return set.eval(j, x, y); }

std::vector<double> q_gamma_form_coefficients(int j, const ZetaContext& zeta, const std::vector<double>& c) {
  check_j(j, 3);
  if (c.size() < 5) throw DomainError("c needs entries through index 4");
  const double z1 = zeta.zeta_deriv(1), z2 = zeta.zeta_deriv(2), z3 = zeta.zeta_deriv(3), z4 = zeta.zeta_deriv(4);
  const double ga = zeta.stieltjes(0), G1 = zeta.stieltjes(1), G2 = zeta.stieltjes(2), G3 = zeta.stieltjes(3);
  const double c1 = c[1], c2 = c[2], c3 = c[3], c4 = c[4];
  const double p = std::numbers::pi;
  const double p2 = p * p, p4 = p2 * p2, p6 = p4 * p2, p8 = p4 * p4, p10 = p8 * p2;
  const double W = 216 * z1 * z1 / p6 - 18 * z2 / p4;
  const double V = -1296 * z1 * z1 * z1 / p8 + 216 * z1 * z2 / p6 - 6 * z3 / p4;
  switch (j) {
    case 3:
      return {4 * ga / p2 - 12 * z1 / p4 - c1 / p2,
              6 * c1 / p2 - 24 * ga / p2 + 72 * z1 / p4,
              -12 * c1 / p2 + 48 * ga / p2 - 144 * z1 / p4,
              -24 * ga / p2 + 72 * z1 / p4 + 8 * c1 / p2};
    case 2:
      return {12 * G1 / p2 - 18 * ga * ga / p2 + 144 * z1 * ga / p4 - 432 * z1 * z1 / p6 + 36 * z2 / p4
                  + 12 * c1 * ga / p2 - 36 * z1 * c1 / p4 - 3 * c2 / p2,
              -48 * c1 * ga / p2 + 72 * ga * ga / p2 + 144 * z1 * c1 / p4 + 12 * c2 / p2 - 48 * G1 / p2
                  - 576 * z1 * ga / p4 + 1728 * z1 * z1 / p6 - 144 * z2 / p4,
              48 * c1 * ga / p2 - 30 * ga * ga / p2 - 144 * z1 * c1 / p4 - 12 * c2 / p2 + 36 * G1 / p2
                  + 288 * z1 * ga / p4 - 864 * z1 * z1 / p6 + 72 * z2 / p4};
    case 1:
      return {-36 * c1 * ga * ga / p2 + 24 * ga * ga * ga / p2 + 24 * c1 * G1 / p2 + 288 * c1 * z1 * ga / p4
                  + 24 * c2 * ga / p2 - 72 * ga * G1 / p2 - 432 * z1 * ga * ga / p4 - 4 * c1 * W
                  - 72 * c2 * z1 / p4 - 6 * c3 / p2 + 12 * G2 / p2 + 288 * z1 * G1 / p4 + 16 * W * ga
                  - 10368 * z1 * z1 * z1 / p8 + 1728 * z1 * z2 / p6 - 48 * z3 / p4,
              72 * c1 * ga * ga / p2 + 24 * ga * ga * ga / p2 - 48 * c1 * G1 / p2 - 576 * c1 * z1 * ga / p4
                  - 48 * c2 * ga / p2 + 24 * ga * G1 / p2 - 144 * z1 * ga * ga / p4 + 8 * c1 * W
                  + 144 * c2 * z1 / p4 + 12 * c3 / p2 - 36 * G2 / p2 - 288 * z1 * G1 / p4};
    default: {
      const double ga2 = ga * ga, ga3 = ga2 * ga, ga4 = ga2 * ga2;
      return {-31104 * z1 * z1 * z2 / p8 + 1152 * z1 * z3 / p6 - 72 * z1 * c3 / p4 - 6 * c4 / p2 + 8 * V * c1
              - 4 * W * c2 - 24 * z4 / p4 + 864 * z2 * z2 / p6 + 124416 * z1 * z1 * z1 * z1 / p10
              + 24 * G3 / p2 + 30 * ga4 / p2 + 48 * G1 * G1 / p2 + 24 * G1 * c2 / p2 - 36 * ga2 * c2 / p2
              - 72 * ga2 * G1 / p2 + 32 * V * ga + 32 * ga2 * W + 16 * ga * W * c1 + 288 * z1 * G2 / p4
              + 12 * G2 * c1 / p2 + 24 * ga * c3 / p2 + 24 * ga3 * c1 / p2 - 24 * ga * G2 / p2
              - 576 * z1 * ga3 / p4 + 288 * z1 * G1 * c1 / p4 + 288 * ga * z1 * c2 / p4
              + 576 * z1 * ga * G1 / p4 - 72 * ga * G1 * c1 / p2 - 432 * ga2 * z1 * c1 / p4};
    }
  }
}

double q_poly_gamma_form(int j, double x, double y, const std::vector<double>& c, const ZetaContext& zeta) {
  return eval_table(q_gamma_form_coefficients(j, zeta, c), x, y);
}

std::int64_t gamma_kn(int k, int n) {
  if (k < 1 || n < 0) throw DomainError("gamma_kn needs k >= 1, n >= 0");
  if (n == 0) return k;
  std::int64_t s = 0;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      s += binom(k, i) * binom(k, j) * binom(n - 1, i + j - 2) * binom(i + j - 2, j - 1);
  return s;
}

std::vector<double> w_k_coefficients(int k) {
  if (k != 2 && k != 3) throw UnsupportedError("w_k validated for k in {2, 3} only");
  const int K2 = k * k;
  std::vector<double> w(K2 + 1, 0.0);
  w[K2] = 1.0;
  for (int n = 0; n < K2; ++n) {
    const double term = double(binom(K2, n + 1)) * double(gamma_kn(k, n)) * ((n % 2) ? -1.0 : 1.0);
    w[K2] -= term;
    w[K2 - n - 1] += term;
  }
  return w;
}

double w_k(int k, double x) {
  const auto w = w_k_coefficients(k);
  double v = 0;
  for (int i = int(w.size()) - 1; i >= 0; --i) v = v * x + w[i];
  return v;
}

}  // namespace dmv
