#pragma once

// Shifted residue expressions for I = {a, 0}, J = {b, 0}, generic over the
// scalar type.  A provider P supplies
//
//   using complex_type, real_type;
//   f(s) = s zeta(1+s), h(s) = 1/zeta(2+s), F(s) = s f'(s) - f(s), H(s) = h'(s),
//   G(s) (entire, G(0) = 1), g1() = f'(0), c1() = G'(0).
//
// Y = log K, L = log(t / 2 pi), X = Y - L.  All expressions have simple poles
// at a, b, a - b, a + b = 0; callers guard the distance.

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>
#include <cmath>
#include <complex>
#include <vector>

namespace dmv {

using qreal = boost::multiprecision::float128;
using qcplx = boost::multiprecision::complex128;

template <class C>
struct ResidueBlocks {
  // Table-1 residues and the zeta products that multiply them.
  C r11, r12, r21, r22;
  C c11, c12, c21, c22;
};

template <class C>
struct KappaTable {
  C k11, kt11, k12, k13, k14;
  C k25, kt25, k26, k27, k28, kt28, k29, k210, k211;
};

namespace residue {

template <class P>
using C_t = typename P::complex_type;
template <class P>
using R_t = typename P::real_type;

template <class C, class R>
C expc(const C& z) {
  using std::exp;
  return exp(z);
}

// R1(a, b) at Y = log K.
template <class P>
C_t<P> r1(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y) {
  using C = C_t<P>;
  const C ab = a + b;
  const C fa = m.f(a), fb = m.f(b), fab = m.f(ab), hab = m.h(ab);
  const C base = fab / ab * fa / a * fb / b;
  const C L0 = C(Y + m.c1() + m.g1());
  // (f'(x)/x - f(x)/x^2) = F(x)/x^2
  return L0 * base * hab + C(2) * base * m.H(ab) + m.F(ab) / (ab * ab) * fa / a * fb / b * hab +
         fab / ab * m.F(a) / (a * a) * fb / b * hab + fab / ab * fa / a * m.F(b) / (b * b) * hab;
}

// R1'(a, b): residues of the M0 integrand at s = -a, -b, -a-b.
template <class P>
C_t<P> r1_prime(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y) {
  using C = C_t<P>;
  const C Yc(Y);
  const C ab = a + b;
  return m.G(-a) * expc<C, R_t<P>>(-a * Yc) / (a * a) * m.f(b) / b * m.f(b - a) / (b - a) * m.f(-a) * m.h(b - a) +
         m.G(-b) * expc<C, R_t<P>>(-b * Yc) / (b * b) * m.f(a) / a * m.f(a - b) / (a - b) * m.f(-b) * m.h(a - b) +
         m.G(-ab) * expc<C, R_t<P>>(-ab * Yc) / (ab * ab) * m.f(-b) / b * m.f(-a) / a * m.f(-ab) * m.h(-ab);
}

// The four Table-1 residues and their zeta-product multipliers.
template <class P>
ResidueBlocks<C_t<P>> blocks(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y,
                             const R_t<P>& L) {
  using C = C_t<P>;
  const C Yc(Y), Lc(L), X(Y - L);
  const C g1(m.g1()), c1(m.c1());
  const C ab = a + b;
  auto q = [&](const C& s) { return expc<C, R_t<P>>(-s * Lc); };  // (2 pi / t)^s
  auto Kp = [&](const C& s) { return expc<C, R_t<P>>(-s * Yc); };  // K^{-s}
  ResidueBlocks<C> r;
  r.r11 = -q(ab) * m.h(-ab) * (m.F(-ab) / (ab * ab) + m.f(-ab) / ab * (X + g1 + c1)) -
          Kp(ab) * m.h(-ab) * m.G(-ab) / ab * m.f(-ab) / ab;
  r.r22 = -m.h(ab) * (m.F(ab) / (ab * ab) + m.f(ab) / ab * (X - g1 + c1)) +
          Kp(ab) * q(-ab) * m.h(ab) * m.G(-ab) / (-ab) * m.f(ab) / ab;
  r.r12 = -q(a) * m.h(b - a) * m.f(-a) / a * m.f(b) / b + Kp(a) * m.h(b - a) * m.G(-a) / a * m.f(b - a) / (b - a) -
          Kp(b) * q(a - b) * m.h(b - a) * m.G(-b) / b * m.f(b - a) / (b - a);
  r.r21 = -q(b) * m.h(a - b) * m.f(-b) / b * m.f(a) / a + Kp(b) * m.h(a - b) * m.G(-b) / b * m.f(a - b) / (a - b) -
          Kp(a) * q(b - a) * m.h(a - b) * m.G(-a) / a * m.f(a - b) / (a - b);
  // zeta(1 - x) = -f(-x)/x, zeta(1 + x) = f(x)/x
  const C zma = -m.f(-a) / a, zmb = -m.f(-b) / b, zpa = m.f(a) / a, zpb = m.f(b) / b;
  r.c11 = zma * zmb;
  r.c12 = zma * zpb;
  r.c21 = zpa * zmb;
  r.c22 = zpa * zpb;
  return r;
}

// R2(a, b), the seven-term display.
template <class P>
C_t<P> r2(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y, const R_t<P>& L) {
  using C = C_t<P>;
  const C Yc(Y), Lc(L), X(Y - L);
  const C g1(m.g1()), c1(m.c1());
  const C ab = a + b;
  auto q = [&](const C& s) { return expc<C, R_t<P>>(-s * Lc); };
  auto Kp = [&](const C& s) { return expc<C, R_t<P>>(-s * Yc); };
  const C fa = m.f(a), fb = m.f(b), fma = m.f(-a), fmb = m.f(-b);
  return -q(ab) * m.h(-ab) * fma / a * fmb / b * (m.F(-ab) / (ab * ab) + m.f(-ab) / ab * (X + g1 + c1)) +
         q(a) * m.h(b - a) * fma * fma / (a * a) * fb * fb / (b * b) +
         q(b) * m.h(a - b) * fmb * fmb / (b * b) * fa * fa / (a * a) -
         m.h(ab) * fa / a * fb / b * (m.F(ab) / (ab * ab) + m.f(ab) / ab * (X - g1 + c1)) +
         Kp(b) * q(a - b) * m.h(b - a) * m.G(-b) / b * m.f(b - a) / (b - a) * fma / a * fb / b +
         Kp(a) * q(b - a) * m.h(a - b) * m.G(-a) / a * m.f(a - b) / (a - b) * fa / a * fmb / b -
         Kp(ab) * q(-ab) * m.h(ab) * m.G(-ab) / ab * m.f(ab) / ab * fa / a * fb / b;
}

template <class P>
KappaTable<C_t<P>> kappas(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y, const R_t<P>& L) {
  using C = C_t<P>;
  const C Yc(Y), Lc(L);
  const C ab = a + b;
  auto E1 = [&](const C& s) { return expc<C, R_t<P>>(s * Lc); };
  auto E2 = [&](const C& s) { return expc<C, R_t<P>>(s * Yc); };
  const C fa = m.f(a), fb = m.f(b), fab = m.f(ab), hab = m.h(ab);
  const C fma = m.f(-a), fmb = m.f(-b);
  KappaTable<C> k;
  k.k11 = fa * fb * fab * hab;
  k.kt11 = fa * fb * fab * m.H(ab);
  k.k12 = fa * fb * m.F(ab) * hab;
  k.k13 = m.F(a) * fb * fab * hab;
  k.k14 = fa * m.F(b) * fab * hab;
  k.k25 = -E1(-ab) * m.h(-ab) * fma * fmb * m.F(-ab);
  k.kt25 = E1(-ab) * m.h(-ab) * fma * fmb * m.f(-ab);
  k.k26 = E1(-a) * m.h(b - a) * fma * fma * fb * fb;
  k.k27 = E1(-b) * m.h(a - b) * fa * fa * fmb * fmb;
  k.k28 = hab * fa * fb * m.F(ab);
  k.kt28 = hab * fa * fb * fab;
  k.k29 = E2(-b) * E1(b - a) * m.h(b - a) * m.G(-b) * fma * fb * m.f(b - a);
  k.k210 = E2(-a) * E1(a - b) * m.h(a - b) * m.G(-a) * fa * fmb * m.f(a - b);
  k.k211 = E2(-ab) * E1(ab) * hab * fa * fb * m.G(-ab) * fab;
  return k;
}

// R(a, b) = R1 + R2 assembled from the kappa table.
template <class P>
C_t<P> r_total_kappa(const P& m, const C_t<P>& a, const C_t<P>& b, const R_t<P>& Y, const R_t<P>& L) {
  using C = C_t<P>;
  const auto k = kappas(m, a, b, Y, L);
  const C ab = a + b;
  const C g1(m.g1()), c1(m.c1());
  const C Lp = C(Y - L) + g1 + c1;
  const C inner = (C(L) + C(2) * g1) / ab * k.k11 + C(2) / ab * k.kt11 + k.k13 / (a * ab) + k.k14 / (b * ab) +
                  k.k25 / (ab * ab) - k.kt25 * Lp / ab + k.k26 / (a * b) + k.k27 / (a * b) +
                  k.k29 / (b * (b - a)) + k.k210 / (a * (a - b)) - k.k211 / (ab * ab);
  return inner / (a * b);
}

}  // namespace residue

// Polynomial stand-ins for f, h, G built from Taylor coefficients, with F and
// H derived from the same coefficients so that every identity among them is
// exact.  Used with float128 where the residue forms cancel catastrophically.
template <class C, class R>
class TaylorProvider {
 public:
  using complex_type = C;
  using real_type = R;

  TaylorProvider(const std::vector<double>& g, const std::vector<double>& delta, const std::vector<double>& c) {
    for (double v : g) g_.push_back(R(v));
    for (double v : delta) d_.push_back(R(v));
    for (double v : c) c_.push_back(R(v));
    for (std::size_t j = 0; j < g_.size(); ++j) gF_.push_back(R(double(j) - 1.0) * g_[j]);
    for (std::size_t j = 1; j < d_.size(); ++j) dH_.push_back(R(double(j)) * d_[j]);
  }

  C f(const C& s) const { return horner(g_, s); }
  C h(const C& s) const { return horner(d_, s); }
  C F(const C& s) const { return horner(gF_, s); }
  C H(const C& s) const { return horner(dH_, s); }
  C G(const C& s) const { return horner(c_, s); }
  R g1() const { return g_.size() > 1 ? g_[1] : R(0); }
  R c1() const { return c_.size() > 1 ? c_[1] : R(0); }

 private:
  static C horner(const std::vector<R>& p, const C& s) {
    C acc(0);
    for (std::size_t j = p.size(); j-- > 0;) acc = acc * s + C(p[j]);
    return acc;
  }
  std::vector<R> g_, d_, c_, gF_, dH_;
};

}  // namespace dmv
