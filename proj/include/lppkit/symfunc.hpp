#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lppkit/common.hpp"
#include "lppkit/model.hpp"

namespace lppkit {

// Symmetric polynomial primitives over a generic scalar backend (double for
// production, Rat for oracle-grade checks). Window conventions: alpha^{(i,j)}
// keeps variables alpha_{i+1}..alpha_j, and the degenerate window (i,i] makes
// h_l the indicator of l = 0.

// Complete homogeneous h_l over all of alpha.
template <class T>
T complete_homogeneous(long l, const std::vector<T>& alpha) {
  if (l < 0) return T(0);
  if (l == 0) return T(1);
  // H[d] over a growing variable set; h recursion H_k[d] = H_{k-1}[d] + a_k H_k[d-1]
  std::vector<T> H(static_cast<size_t>(l) + 1, T(0));
  H[0] = T(1);
  for (const T& ak : alpha)
    for (long d = 1; d <= l; ++d) H[d] += ak * H[d - 1];
  return H[l];
}

// Elementary e_l; zero outside 0 <= l <= #vars.
template <class T>
T elementary(long l, const std::vector<T>& alpha) {
  if (l < 0 || l > static_cast<long>(alpha.size())) return T(0);
  if (l == 0) return T(1);
  std::vector<T> E(static_cast<size_t>(l) + 1, T(0));
  E[0] = T(1);
  for (const T& ak : alpha)
    for (long d = l; d >= 1; --d) E[d] += ak * E[d - 1];
  return E[l];
}

template <class T>
std::vector<T> window(const std::vector<T>& alpha, int i, int j) {
  // variables alpha_{i+1}..alpha_j (1-based bounds)
  std::vector<T> w;
  for (int k = i + 1; k <= j; ++k) w.push_back(alpha.at(k - 1));
  return w;
}

// The two-branch weight w_alpha^{(i,j)}(k): elementary branch for j >= i,
// homogeneous branch for j < i.
template <class T>
T w_weight(int i, int j, long k, const std::vector<T>& alpha) {
  int N = static_cast<int>(alpha.size());
  if (i < 1 || j < 1 || i > N || j > N) throw std::invalid_argument("w_weight: index out of range");
  if (k < 0) return T(0);
  T acc(0);
  if (j >= i) {
    auto vars = window(alpha, i, j);
    long top = std::min<long>(j - i, k);
    T sign(1);
    for (long l = 0; l <= top; ++l) {
      acc += sign * elementary(l, vars);
      sign = T(0) - sign;
    }
  } else {
    auto vars = window(alpha, j, i);
    for (long l = 0; l <= k; ++l) acc += complete_homogeneous(l, vars);
  }
  return acc;
}

template <class T>
T det_dense(std::vector<std::vector<T>> a) {
  size_t n = a.size();
  T det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == T(0)) ++piv;
    if (piv == n) return T(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = T(0) - det;
    }
    det *= a[c][c];
    T inv = T(1) / a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == T(0)) continue;
      T f = a[r][c] * inv;
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// One-step law of the vector chain with per-site rates p_j:
// prod_k (1-p_k) p_k^{y_k-x_k} * det[ w^{(i,j)}_{1/p}(y_j + j - x_i - i) ].
template <class T>
T one_step_transition(const std::vector<T>& p, const IntVector& x, const IntVector& y) {
  size_t N = p.size();
  if (x.size() != N || y.size() != N) throw std::invalid_argument("one_step_transition: size mismatch");
  require_weyl(x);
  require_weyl(y);
  std::vector<T> inv_p;
  for (const T& pk : p) {
    if (!(pk > T(0)) || !(pk < T(1))) throw std::invalid_argument("one_step_transition: need 0 < p < 1");
    inv_p.push_back(T(1) / pk);
  }
  std::vector<std::vector<T>> W(N, std::vector<T>(N));
  for (size_t i = 1; i <= N; ++i)
    for (size_t j = 1; j <= N; ++j)
      W[i - 1][j - 1] = w_weight(static_cast<int>(i), static_cast<int>(j),
                                 y[j - 1] + static_cast<long>(j) - x[i - 1] - static_cast<long>(i),
                                 inv_p);
  T pref(1);
  for (size_t k = 0; k < N; ++k) {
    T pw(1);
    long e = y[k] - x[k];
    T base = e >= 0 ? p[k] : T(1) / p[k];
    for (long q = 0; q < (e >= 0 ? e : -e); ++q) pw *= base;
    pref *= (T(1) - p[k]) * pw;
  }
  return pref * det_dense(W);
}

// Lattice function with declared left support: f(x) = 0 for x < x_min.
template <class T>
struct LatticeFunction {
  long x_min = 0;
  std::vector<T> vals;  // vals[k] = f(x_min + k); zero outside the window

  static LatticeFunction zero(long x_min, size_t len) {
    LatticeFunction f;
    f.x_min = x_min;
    f.vals.assign(len, T(0));
    return f;
  }
  long x_max() const { return x_min + static_cast<long>(vals.size()) - 1; }
  T at(long x) const {
    if (x < x_min || x > x_max()) return T(0);
    return vals[static_cast<size_t>(x - x_min)];
  }
  void set(long x, const T& v) { vals.at(static_cast<size_t>(x - x_min)) = v; }
};

// nabla(b) f(x) = f(x+1) - f(x)/b.
template <class T>
LatticeFunction<T> nabla(const T& b, const LatticeFunction<T>& f) {
  if (b == T(0)) throw std::invalid_argument("nabla: b must be nonzero");
  auto g = LatticeFunction<T>::zero(f.x_min - 1, f.vals.size() + 1);
  T inv_b = T(1) / b;
  for (long x = g.x_min; x <= g.x_max(); ++x) g.set(x, f.at(x + 1) - inv_b * f.at(x));
  return g;
}

// nabla(b)^{-1} f(x) = sum_{n<0} b^{n+1} f(x+n); finite because f has declared
// left support. The result does not vanish to the right of f's window, so the
// returned window extends `pad` sites past it; values further right are not
// represented.
template <class T>
LatticeFunction<T> nabla_inv(const T& b, const LatticeFunction<T>& f, long pad = 8) {
  if (b == T(0)) throw std::invalid_argument("nabla_inv: b must be nonzero");
  auto g = LatticeFunction<T>::zero(f.x_min + 1, f.vals.size() + static_cast<size_t>(pad));
  for (long x = g.x_min; x <= g.x_max(); ++x) {
    T acc(0);
    T bpow(1);  // b^{n+1} at n = -1
    for (long n = -1; x + n >= f.x_min; --n) {
      acc += bpow * f.at(x + n);
      bpow = bpow / b;
    }
    g.set(x, acc);
  }
  return g;
}

}  // namespace lppkit
