#include "lppkit/nystrom.hpp"

#include <cmath>
#include <stdexcept>

#include "lppkit/quadrature.hpp"

namespace lppkit {

NystromScheme NystromScheme::panels(const std::vector<double>& boundaries, int per_panel) {
  if (boundaries.size() < 2) throw std::invalid_argument("NystromScheme: need at least one panel");
  for (size_t i = 1; i < boundaries.size(); ++i)
    if (!(boundaries[i] > boundaries[i - 1]))
      throw std::invalid_argument("NystromScheme: boundaries must be strictly increasing");
  std::vector<double> gn, gw;
  gauss_legendre(per_panel, gn, gw);
  NystromScheme s;
  for (size_t p = 0; p + 1 < boundaries.size(); ++p) {
    double a = boundaries[p], b = boundaries[p + 1];
    for (int q = 0; q < per_panel; ++q) {
      s.nodes.push_back(0.5 * (a + b) + 0.5 * (b - a) * gn[q]);
      s.weights.push_back(0.5 * (b - a) * gw[q]);
    }
  }
  return s;
}

NystromScheme NystromScheme::split_at_zero(double L, int per_half) {
  return panels({-L, 0.0, L}, per_half);
}

MatrixC nystrom_matrix(const Kernel& K, const NystromScheme& s) {
  const int n = static_cast<int>(s.size());
  MatrixC m(n, n);
  std::vector<double> sq(n);
  for (int p = 0; p < n; ++p) sq[p] = std::sqrt(s.weights[p]);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      Complex v = K(s.nodes[p], s.nodes[q]);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw numerical_error("fredholm_det: non-finite kernel value at node pair (" +
                              std::to_string(p) + "," + std::to_string(q) + ")");
      m(p, q) = sq[p] * sq[q] * v;
    }
  return m;
}

Complex fredholm_det(const Kernel& K, const NystromScheme& s) {
  MatrixC m = nystrom_matrix(K, s);
  m += MatrixC::Identity(m.rows(), m.cols());
  return balanced_det(m);
}

Complex fredholm_det(const MatrixC& kernel_values, const NystromScheme& s) {
  const int n = static_cast<int>(s.size());
  if (kernel_values.rows() != n || kernel_values.cols() != n)
    throw std::invalid_argument("fredholm_det: kernel matrix size mismatch");
  MatrixC m(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      m(p, q) = std::sqrt(s.weights[p]) * std::sqrt(s.weights[q]) * kernel_values(p, q);
  m += MatrixC::Identity(n, n);
  return balanced_det(m);
}

}  // namespace lppkit
