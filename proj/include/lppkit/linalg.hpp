#pragma once

#include <Eigen/Dense>

#include "lppkit/common.hpp"

namespace lppkit {

using MatrixC = Eigen::MatrixXcd;

// Determinant via pivoted LU after Osborne-style balancing with powers of 2.
// Balancing is a diagonal similarity, so the tracked adjustment factor is
// exactly 1; the LU product is accumulated with explicit exponent tracking to
// survive the dynamic range of the finite-size kernels.
Complex balanced_det(MatrixC a);

}  // namespace lppkit
