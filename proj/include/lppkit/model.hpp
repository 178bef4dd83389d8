#pragma once

#include <cstdint>
#include <vector>

#include "lppkit/common.hpp"

namespace lppkit {

enum class WeightKind { Geometric, Exponential };

// Inhomogeneity parameters. Geometric cell (i,j) has rate a_i * b_j; the
// exponential model has rate alpha_i + beta_j.
struct ParamSet {
  WeightKind kind = WeightKind::Geometric;
  std::vector<double> a, b;         // geometric factors, a_i b_j in (0,1)
  std::vector<double> alpha, beta;  // exponential rates, alpha_i + beta_j > 0

  int rows() const { return static_cast<int>(kind == WeightKind::Geometric ? b.size() : beta.size()); }
  int cols() const { return static_cast<int>(kind == WeightKind::Geometric ? a.size() : alpha.size()); }

  static ParamSet geometric(std::vector<double> a, std::vector<double> b);
  static ParamSet exponential(std::vector<double> alpha, std::vector<double> beta);

  // Throws std::invalid_argument unless every stored pair satisfies the
  // rate constraint.
  void validate() const;

  double geom_rate(int i, int j) const { return a.at(i - 1) * b.at(j - 1); }
  double exp_rate(int i, int j) const { return alpha.at(i - 1) + beta.at(j - 1); }
};

// Exact-rational twin of the geometric ParamSet, used by the oracles.
struct RationalParams {
  std::vector<Rat> a, b;
  void validate() const;
  Rat rate(int i, int j) const { return a.at(i - 1) * b.at(j - 1); }
  ParamSet to_double() const;
};

using IntVector = std::vector<long long>;  // element of the integer Weyl chamber
using RealVector = std::vector<double>;

void require_weyl(const IntVector& x);
void require_weyl(const RealVector& x);

// Sampled weight array w(i,j), i = 1..m (column of the growth recursion),
// j = 1..N. Deterministic in (params, seed, sample).
std::vector<IntVector> sample_weights_geometric(const ParamSet& p, int m, int N, uint64_t seed,
                                                uint64_t sample = 0);
std::vector<RealVector> sample_weights_exponential(const ParamSet& p, int m, int N, uint64_t seed,
                                                   uint64_t sample = 0);

// G(m,n) on the full rectangle, boundary G(0,n) = x_n, G(m,0) = 0.
template <class V>
struct GrowthFieldT {
  int m_max = 0, N = 0;
  V boundary;                // x
  std::vector<V> values;     // values[m-1][n-1] = G(m,n)

  typename V::value_type at(int m, int n) const {
    if (n == 0) return typename V::value_type(0);
    if (m == 0) return boundary.at(n - 1);
    return values.at(m - 1).at(n - 1);
  }
};
using GrowthField = GrowthFieldT<IntVector>;
using GrowthFieldReal = GrowthFieldT<RealVector>;

GrowthField grow(const std::vector<IntVector>& weights, const IntVector& x);
GrowthField grow(const ParamSet& p, const IntVector& x, int m, uint64_t seed);
GrowthFieldReal grow(const std::vector<RealVector>& weights, const RealVector& x);

// One Markov step of the vector chain: y_j = max(y_{j-1}, x_j) + w_j with
// y_0 = -inf, so y_1 = x_1 + w_1. Matches grow() whenever x_1 >= 0.
template <class V, class W>
V chain_step(const V& x, const W& w) {
  V y(x.size());
  for (size_t j = 0; j < x.size(); ++j) {
    auto base = (j == 0) ? x[0] : std::max(y[j - 1], x[j]);
    y[j] = base + w[j];
  }
  return y;
}

// Height interface H(x,t) = G((t+x+1)/2, (t-x+1)/2) at odd x+t, linearly
// interpolated in x in between. Throws std::out_of_range outside the
// populated cone.
double height_interface(const GrowthField& field, double x, int t);

}  // namespace lppkit
