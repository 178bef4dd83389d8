#pragma once

// Self-contained reference implementations used only by the test suites.
// Everything here is independent of the library under test: the Airy function
// comes from its Maclaurin series / asymptotic expansion, quadrature nodes and
// determinants are computed locally. These anchor the Fredholm machinery and
// the scaling-limit distributions against values produced by a different
// route.

#include <cmath>
#include <stdexcept>
#include <vector>

namespace testoracle {

inline void airy_series(double x, double& ai, double& aip) {
  // Ai(x) = c1 f(x) - c2 g(x) with the two 0F1-type series.
  const double c1 = 0.3550280538878172;   // Ai(0)  = 3^{-2/3} / Gamma(2/3)
  const double c2 = 0.2588194037928068;   // -Ai'(0) = 3^{-1/3} / Gamma(1/3)
  double x3 = x * x * x;
  double f = 1.0, fp = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= x3 / ((3.0 * k - 1.0) * (3.0 * k));
    f += term;
    fp += term * (3.0 * k) / (x == 0.0 ? 1.0 : x);
    if (std::abs(term) < 1e-22 * (std::abs(f) + 1.0) && k > 4) break;
  }
  if (x == 0.0) fp = 0.0;
  double g = x, gp = 1.0;
  term = x;
  for (int k = 1; k < 200; ++k) {
    term *= x3 / ((3.0 * k) * (3.0 * k + 1.0));
    g += term;
    gp += term * (3.0 * k + 1.0) / (x == 0.0 ? 1.0 : x);
    if (std::abs(term) < 1e-22 * (std::abs(g) + 1.0) && k > 4) break;
  }
  if (x == 0.0) {
    g = 0.0;
    gp = 1.0;
  }
  ai = c1 * f - c2 * g;
  aip = c1 * fp - c2 * gp;
}

inline void airy_asymptotic(double x, double& ai, double& aip) {
  // decaying expansion for large positive x
  double zeta = 2.0 / 3.0 * std::pow(x, 1.5);
  double pre = std::exp(-zeta) / (2.0 * std::sqrt(M_PI));
  double u = 1.0, su = 1.0, sv = 1.0;
  double sign = -1.0;
  for (int k = 0; k < 40; ++k) {
    double ratio = ((3.0 * k + 2.5) * (3.0 * k + 1.5) * (3.0 * k + 0.5)) /
                   (54.0 * (k + 1.0) * (k + 0.5));
    double unext = u * ratio;
    double tu = unext / std::pow(zeta, k + 1.0);
    double tv = tu * (6.0 * (k + 1.0) + 1.0) / (1.0 - 6.0 * (k + 1.0));
    if (std::abs(tu) > std::abs(u / std::pow(zeta, static_cast<double>(k))) && k > 2) break;
    su += sign * tu;
    sv += sign * tv;
    u = unext;
    sign = -sign;
  }
  ai = pre * su / std::pow(x, 0.25);
  aip = -pre * sv * std::pow(x, 0.25);
}

inline double airy_ai(double x) {
  double ai, aip;
  if (x < 7.0)
    airy_series(x, ai, aip);
  else
    airy_asymptotic(x, ai, aip);
  return ai;
}

inline double airy_ai_prime(double x) {
  double ai, aip;
  if (x < 7.0)
    airy_series(x, ai, aip);
  else
    airy_asymptotic(x, ai, aip);
  return aip;
}

inline double airy_kernel(double x, double y) {
  if (std::abs(x - y) < 1e-7) {
    double m = 0.5 * (x + y);
    double ai = airy_ai(m), aip = airy_ai_prime(m);
    return aip * aip - m * ai * ai;
  }
  return (airy_ai(x) * airy_ai_prime(y) - airy_ai_prime(x) * airy_ai(y)) / (x - y);
}

// local Gauss-Legendre, independent of the library version
inline void gl_rule(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (t * p0 - p1) / (t * t - 1.0);
      double dt = p0 / pp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    x[i] = -t;
    x[n - 1 - i] = t;
    w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * pp * pp);
  }
}

inline double det_ge(std::vector<std::vector<double>> a) {
  int n = static_cast<int>(a.size());
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

struct OracleGrid {
  std::vector<double> x, w;
};

inline OracleGrid grid_on(double a, double mid, double b, int per) {
  std::vector<double> gx, gw;
  gl_rule(per, gx, gw);
  OracleGrid g;
  for (int part = 0; part < 2; ++part) {
    double lo = part == 0 ? a : mid;
    double hi = part == 0 ? mid : b;
    for (int q = 0; q < per; ++q) {
      g.x.push_back(0.5 * (lo + hi) + 0.5 * (hi - lo) * gx[q]);
      g.w.push_back(0.5 * (hi - lo) * gw[q]);
    }
  }
  return g;
}

// largest-eigenvalue law of the unitary ensemble: det(I - K_Ai) on (s, inf)
inline double tracy_widom_gue(double s) {
  OracleGrid g = grid_on(s, s + 4.0, s + 12.0, 48);
  int n = static_cast<int>(g.x.size());
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      m[p][q] = (p == q ? 1.0 : 0.0) -
                std::sqrt(g.w[p] * g.w[q]) * airy_kernel(g.x[p], g.x[q]);
  return det_ge(m);
}

// orthogonal-ensemble law via det(I -+ A_s), A_s(u,v) = Ai(u+v+s) on (0, inf)
inline double goe_det(double s, double sign) {
  OracleGrid g = grid_on(0.0, 4.0, 12.0, 48);
  int n = static_cast<int>(g.x.size());
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      m[p][q] = (p == q ? 1.0 : 0.0) +
                sign * std::sqrt(g.w[p] * g.w[q]) * airy_ai(g.x[p] + g.x[q] + s);
  return det_ge(m);
}

inline double tracy_widom_goe(double s) { return goe_det(s, -1.0); }

}  // namespace testoracle
