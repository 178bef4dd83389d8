#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "lppkit/common.hpp"

namespace lppkit {

struct Circle {
  Complex center{0.0, 0.0};
  double radius = 1.0;
};
struct VerticalLine {
  double offset = 0.0;
  double half_height = 1.0;
};

// Circles are counter-clockwise, lines upward.
struct ContourSpec {
  std::variant<Circle, VerticalLine> shape;
  int nodes = 64;

  static ContourSpec circle(Complex center, double radius, int nodes = 64);
  static ContourSpec vline(double offset, double half_height, int nodes = 128);
};

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double node_doubling_delta = 0.0;
};

// Nodes z_k and weights d_k such that (1/2pi i) \int f dz ~= sum_k d_k f(z_k).
struct ContourNodes {
  std::vector<Complex> z;
  std::vector<Complex> d;
};

ContourNodes contour_nodes(const ContourSpec& spec);

// Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

using CFunc = std::function<Complex(Complex)>;

// (1/2pi i) times the contour integral by the trapezoid rule on equispaced
// angles; spectrally accurate for integrands analytic near the circle.
QuadratureResult circle_integral(const CFunc& f, const ContourSpec& spec);

// (1/2pi i) \int over offset + i[-H, H], composite Gauss-Legendre. Throws
// numerical_error when |f| at the endpoints exceeds truncation_tol times the
// largest sampled magnitude.
QuadratureResult line_integral(const CFunc& f, const ContourSpec& spec,
                               double truncation_tol = 1e-12);

// (1/2pi i) \oint_{|theta|=r} g(theta)/(theta-1) dtheta, r > 1.
QuadratureResult theta_integral(const std::function<Complex(Complex)>& g, double r, int nodes);

}  // namespace lppkit
