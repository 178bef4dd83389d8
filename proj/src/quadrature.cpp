#include "lppkit/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace lppkit {

ContourSpec ContourSpec::circle(Complex center, double radius, int nodes) {
  if (!(radius > 0.0)) throw std::invalid_argument("ContourSpec: radius must be positive");
  if (nodes < 8) throw std::invalid_argument("ContourSpec: need at least 8 nodes");
  ContourSpec s;
  s.shape = Circle{center, radius};
  s.nodes = nodes;
  return s;
}

ContourSpec ContourSpec::vline(double offset, double half_height, int nodes) {
  if (!(half_height > 0.0)) throw std::invalid_argument("ContourSpec: half_height must be positive");
  if (nodes < 8) throw std::invalid_argument("ContourSpec: need at least 8 nodes");
  ContourSpec s;
  s.shape = VerticalLine{offset, half_height};
  s.nodes = nodes;
  return s;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton from the Chebyshev-based initial guess
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

ContourNodes contour_nodes(const ContourSpec& spec) {
  ContourNodes out;
  if (std::holds_alternative<Circle>(spec.shape)) {
    const auto& c = std::get<Circle>(spec.shape);
    int M = spec.nodes;
    out.z.resize(M);
    out.d.resize(M);
    for (int k = 0; k < M; ++k) {
      double th = 2.0 * kPi * k / M;
      Complex e(std::cos(th), std::sin(th));
      out.z[k] = c.center + c.radius * e;
      // dz/(2pi i) = radius * e * dtheta / (2pi) with dtheta = 2pi/M
      out.d[k] = c.radius * e / static_cast<double>(M);
    }
  } else {
    const auto& l = std::get<VerticalLine>(spec.shape);
    // composite Gauss-Legendre panels along the imaginary direction
    int per_panel = 16;
    int panels = std::max(1, (spec.nodes + per_panel - 1) / per_panel);
    std::vector<double> gn, gw;
    gauss_legendre(per_panel, gn, gw);
    double total = 2.0 * l.half_height;
    double dy = total / panels;
    for (int p = 0; p < panels; ++p) {
      double y0 = -l.half_height + p * dy;
      for (int q = 0; q < per_panel; ++q) {
        double y = y0 + 0.5 * dy * (gn[q] + 1.0);
        out.z.push_back(Complex(l.offset, y));
        // dz = i dy; divide by 2pi i
        out.d.push_back(Complex(gw[q] * 0.5 * dy / (2.0 * kPi), 0.0));
      }
    }
  }
  return out;
}

namespace {
Complex integrate_on(const ContourNodes& nodes, const CFunc& f, double* max_mag = nullptr,
                     double* end_mag = nullptr) {
  Complex acc(0.0, 0.0);
  double mm = 0.0;
  for (size_t k = 0; k < nodes.z.size(); ++k) {
    Complex v = f(nodes.z[k]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw numerical_error("quadrature: non-finite integrand at node " + std::to_string(k));
    mm = std::max(mm, std::abs(v));
    if (end_mag && (k == 0 || k + 1 == nodes.z.size())) *end_mag = std::max(*end_mag, std::abs(v));
    acc += nodes.d[k] * v;
  }
  if (max_mag) *max_mag = mm;
  return acc;
}
}  // namespace

QuadratureResult circle_integral(const CFunc& f, const ContourSpec& spec) {
  if (!std::holds_alternative<Circle>(spec.shape))
    throw std::invalid_argument("circle_integral: circle contour required");
  ContourSpec coarse = spec;
  ContourSpec fine = spec;
  fine.nodes = 2 * spec.nodes;
  Complex v1 = integrate_on(contour_nodes(coarse), f);
  Complex v2 = integrate_on(contour_nodes(fine), f);
  return {v2, std::abs(v2 - v1)};
}

QuadratureResult line_integral(const CFunc& f, const ContourSpec& spec, double truncation_tol) {
  if (!std::holds_alternative<VerticalLine>(spec.shape))
    throw std::invalid_argument("line_integral: vertical line contour required");
  ContourSpec fine = spec;
  fine.nodes = 2 * spec.nodes;
  double max1 = 0.0, end1 = 0.0, max2 = 0.0, end2 = 0.0;
  Complex v1 = integrate_on(contour_nodes(spec), f, &max1, &end1);
  Complex v2 = integrate_on(contour_nodes(fine), f, &max2, &end2);
  if (max2 > 0.0 && end2 > truncation_tol * max2)
    throw numerical_error("line_integral: integrand endpoint magnitude " + std::to_string(end2) +
                          " exceeds truncation tolerance; enlarge half_height");
  return {v2, std::abs(v2 - v1)};
}

QuadratureResult theta_integral(const std::function<Complex(Complex)>& g, double r, int nodes) {
  if (!(r > 1.0)) throw std::invalid_argument("theta_integral: radius must exceed 1");
  auto f = [&](Complex th) { return g(th) / (th - 1.0); };
  return circle_integral(f, ContourSpec::circle(Complex(0, 0), r, nodes));
}

}  // namespace lppkit
