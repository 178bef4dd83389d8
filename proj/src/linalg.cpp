#include "lppkit/linalg.hpp"

#include <cmath>

namespace lppkit {

namespace {
// One sweep of Osborne balancing restricted to power-of-2 scalings.
bool balance_sweep(MatrixC& a) {
  const int n = static_cast<int>(a.rows());
  bool changed = false;
  for (int i = 0; i < n; ++i) {
    double r = 0.0, c = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      r += std::abs(a(i, j));
      c += std::abs(a(j, i));
    }
    if (r == 0.0 || c == 0.0) continue;
    int e = static_cast<int>(std::lround(0.5 * std::log2(c / r)));
    if (e == 0) continue;
    double s = std::ldexp(1.0, e);
    a.row(i) *= s;
    a.col(i) /= s;
    changed = true;
  }
  return changed;
}
}  // namespace

Complex balanced_det(MatrixC a) {
  const int n = static_cast<int>(a.rows());
  if (n == 0) return Complex(1.0, 0.0);
  for (int sweep = 0; sweep < 20 && balance_sweep(a); ++sweep) {
  }
  Eigen::PartialPivLU<MatrixC> lu(a);
  Complex phase(1.0, 0.0);
  double log_abs = 0.0;
  for (int i = 0; i < n; ++i) {
    Complex d = lu.matrixLU()(i, i);
    double m = std::abs(d);
    if (m == 0.0) return Complex(0.0, 0.0);
    phase *= d / m;
    log_abs += std::log(m);
  }
  if (lu.permutationP().determinant() < 0) phase = -phase;
  return phase * std::exp(log_abs);
}

}  // namespace lppkit
