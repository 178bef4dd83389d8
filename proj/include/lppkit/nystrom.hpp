#pragma once

#include <functional>
#include <vector>

#include "lppkit/common.hpp"
#include "lppkit/linalg.hpp"

namespace lppkit {

// Gauss-Legendre panels on the real line; panel boundaries always include 0
// when the kernels carry an indicator split there, so every panel sees a
// smooth integrand. Nodes are strictly inside panels.
struct NystromScheme {
  std::vector<double> nodes;
  std::vector<double> weights;

  // Panels between consecutive boundaries with `per_panel` nodes each.
  static NystromScheme panels(const std::vector<double>& boundaries, int per_panel);
  // [-L, 0] and [0, L] with per_half nodes each.
  static NystromScheme split_at_zero(double L, int per_half);
  size_t size() const { return nodes.size(); }
};

using Kernel = std::function<Complex(double, double)>;

// det(I + M), M_pq = sqrt(w_p w_q) K(u_p, u_q).
Complex fredholm_det(const Kernel& K, const NystromScheme& s);

// Same discretization applied to a precomputed kernel matrix K(u_p, u_q).
Complex fredholm_det(const MatrixC& kernel_values, const NystromScheme& s);

// Symmetrized Nystrom matrix sqrt(w_p) K(u_p,u_q) sqrt(w_q) for callers that
// assemble several kernels before taking one determinant.
MatrixC nystrom_matrix(const Kernel& K, const NystromScheme& s);

}  // namespace lppkit
