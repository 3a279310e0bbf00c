#pragma once

// Truncated power series sum_{j<=N} a_j s^j with complex coefficients.
//
// Binary operations between series of different orders truncate to the
// smaller order; nothing is padded and no error is raised.  Several of the
// sequences combined downstream come from different sources (zeta data,
// quadrature, exponentials) and only the common prefix is meaningful.

#include <algorithm>
#include <complex>
#include <initializer_list>
#include <vector>

namespace dmv {

using cplx = std::complex<double>;

template <class T>
class BasicSeries {
 public:
  using value_type = T;

  BasicSeries() : c_(1, T(0)) {}
  explicit BasicSeries(int order) : c_(order + 1, T(0)) {}
  explicit BasicSeries(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(T(0));
  }
  BasicSeries(std::initializer_list<T> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.push_back(T(0));
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int j) const { return c_[j]; }
  T& operator[](int j) { return c_[j]; }
  // Coefficient j, or zero beyond the truncation order.
  T at(int j) const { return (j >= 0 && j <= order()) ? c_[j] : T(0); }
  const std::vector<T>& coeffs() const { return c_; }

  static BasicSeries constant(T v, int order) {
    BasicSeries r(order);
    r[0] = v;
    return r;
  }
  // The series of s itself: (0, 1, 0, ...).
  static BasicSeries variable(T s0, int order) {
    BasicSeries r(order);
    r[0] = s0;
    if (order >= 1) r[1] = T(1);
    return r;
  }

 private:
  std::vector<T> c_;
};

using PowerSeries = BasicSeries<cplx>;

template <class T>
BasicSeries<T> convolve(const BasicSeries<T>& a, const BasicSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  BasicSeries<T> r(n);
  for (int k = 0; k <= n; ++k) {
    T acc(0);
    for (int u = 0; u <= k; ++u) acc += a[u] * b[k - u];
    r[k] = acc;
  }
  return r;
}

template <class T>
BasicSeries<T> alternate(const BasicSeries<T>& a) {
  BasicSeries<T> r = a;
  for (int j = 1; j <= r.order(); j += 2) r[j] = -r[j];
  return r;
}

template <class T, class S>
S evaluate(const BasicSeries<T>& a, S s) {
  S acc = S(a[a.order()]);
  for (int j = a.order() - 1; j >= 0; --j) acc = acc * s + S(a[j]);
  return acc;
}

template <class T>
BasicSeries<T> operator+(const BasicSeries<T>& a, const BasicSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  BasicSeries<T> r(n);
  for (int j = 0; j <= n; ++j) r[j] = a[j] + b[j];
  return r;
}

template <class T>
BasicSeries<T> operator-(const BasicSeries<T>& a, const BasicSeries<T>& b) {
  const int n = std::min(a.order(), b.order());
  BasicSeries<T> r(n);
  for (int j = 0; j <= n; ++j) r[j] = a[j] - b[j];
  return r;
}

template <class T>
BasicSeries<T> operator*(const BasicSeries<T>& a, const BasicSeries<T>& b) {
  return convolve(a, b);
}

template <class T>
BasicSeries<T> scale(const BasicSeries<T>& a, T k) {
  BasicSeries<T> r = a;
  for (int j = 0; j <= r.order(); ++j) r[j] *= k;
  return r;
}

// 1/a; requires a[0] != 0.
template <class T>
BasicSeries<T> reciprocal(const BasicSeries<T>& a) {
  const int n = a.order();
  BasicSeries<T> r(n);
  r[0] = T(1) / a[0];
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int u = 1; u <= k; ++u) acc += a[u] * r[k - u];
    r[k] = -acc * r[0];
  }
  return r;
}

// exp(a) via the recurrence k e_k = sum_{u>=1} u a_u e_{k-u}.
template <class T>
BasicSeries<T> series_exp(const BasicSeries<T>& a) {
  using std::exp;
  const int n = a.order();
  BasicSeries<T> r(n);
  r[0] = exp(a[0]);
  for (int k = 1; k <= n; ++k) {
    T acc(0);
    for (int u = 1; u <= k; ++u) acc += T(double(u)) * a[u] * r[k - u];
    r[k] = acc / T(double(k));
  }
  return r;
}

// log(a) for a[0] != 0, principal branch at the constant term.
template <class T>
BasicSeries<T> series_log(const BasicSeries<T>& a) {
  using std::log;
  const int n = a.order();
  BasicSeries<T> r(n);
  r[0] = log(a[0]);
  for (int k = 1; k <= n; ++k) {
    T acc = T(double(k)) * a[k];
    for (int u = 1; u < k; ++u) acc -= T(double(u)) * r[u] * a[k - u];
    r[k] = acc / (T(double(k)) * a[0]);
  }
  return r;
}

// Formal derivative; the result has order one less (minimum 0).
template <class T>
BasicSeries<T> derivative(const BasicSeries<T>& a) {
  const int n = std::max(a.order() - 1, 0);
  BasicSeries<T> r(n);
  for (int j = 0; j < a.order(); ++j) r[j] = T(double(j + 1)) * a[j + 1];
  return r;
}

// Coefficients c^j / j!, i.e. the series of e^{c s}.
PowerSeries exp_series(double c, int order);

inline PowerSeries convolve(std::initializer_list<PowerSeries> list) {
  auto it = list.begin();
  PowerSeries r = *it++;
  for (; it != list.end(); ++it) r = convolve(r, *it);
  return r;
}

}  // namespace dmv
