#include "lppkit/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lppkit/rng.hpp"

namespace lppkit {

ParamSet ParamSet::geometric(std::vector<double> a, std::vector<double> b) {
  ParamSet p;
  p.kind = WeightKind::Geometric;
  p.a = std::move(a);
  p.b = std::move(b);
  p.validate();
  return p;
}

ParamSet ParamSet::exponential(std::vector<double> alpha, std::vector<double> beta) {
  ParamSet p;
  p.kind = WeightKind::Exponential;
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  p.validate();
  return p;
}

void ParamSet::validate() const {
  if (kind == WeightKind::Geometric) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ParamSet: empty rate vectors");
    for (double ai : a)
      for (double bj : b) {
        double r = ai * bj;
        if (!(r >= 0.0) || r >= 1.0) throw std::invalid_argument("ParamSet: need a_i*b_j in [0,1)");
      }
  } else {
    if (alpha.empty() || beta.empty()) throw std::invalid_argument("ParamSet: empty rate vectors");
    for (double ai : alpha)
      for (double bj : beta)
        if (!(ai + bj > 0.0)) throw std::invalid_argument("ParamSet: need alpha_i+beta_j > 0");
  }
}

void RationalParams::validate() const {
  if (a.empty() || b.empty()) throw std::invalid_argument("RationalParams: empty rate vectors");
  for (const Rat& ai : a)
    for (const Rat& bj : b) {
      Rat r = ai * bj;
      if (r < 0 || r >= 1) throw std::invalid_argument("RationalParams: need a_i*b_j in [0,1)");
    }
}

ParamSet RationalParams::to_double() const {
  std::vector<double> da, db;
  for (const Rat& v : a) da.push_back(v.convert_to<double>());
  for (const Rat& v : b) db.push_back(v.convert_to<double>());
  return ParamSet::geometric(da, db);
}

void require_weyl(const IntVector& x) {
  if (!weakly_increasing(x)) throw std::invalid_argument("state vector must be weakly increasing");
}
void require_weyl(const RealVector& x) {
  if (!weakly_increasing(x)) throw std::invalid_argument("state vector must be weakly increasing");
}

std::vector<IntVector> sample_weights_geometric(const ParamSet& p, int m, int N, uint64_t seed,
                                                uint64_t sample) {
  if (p.kind != WeightKind::Geometric) throw std::invalid_argument("geometric params required");
  if (m < 1 || N < 1) throw std::invalid_argument("need m, N >= 1");
  if (static_cast<int>(p.a.size()) < m || static_cast<int>(p.b.size()) < N)
    throw std::invalid_argument("sample_weights: parameter vectors shorter than (m, N)");
  p.validate();
  std::vector<IntVector> w(m, IntVector(N));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= N; ++j) {
      double rate = p.geom_rate(i, j);
      w[i - 1][j - 1] = geometric_from_uniform(cell_uniform(seed, i, j, sample), rate);
    }
  return w;
}

std::vector<RealVector> sample_weights_exponential(const ParamSet& p, int m, int N, uint64_t seed,
                                                   uint64_t sample) {
  if (p.kind != WeightKind::Exponential) throw std::invalid_argument("exponential params required");
  if (m < 1 || N < 1) throw std::invalid_argument("need m, N >= 1");
  if (static_cast<int>(p.alpha.size()) < m || static_cast<int>(p.beta.size()) < N)
    throw std::invalid_argument("sample_weights: parameter vectors shorter than (m, N)");
  p.validate();
  std::vector<RealVector> w(m, RealVector(N));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= N; ++j) {
      double rate = p.exp_rate(i, j);
      w[i - 1][j - 1] = exponential_from_uniform(cell_uniform(seed, i, j, sample), rate);
    }
  return w;
}

namespace {
template <class V>
GrowthFieldT<V> grow_impl(const std::vector<V>& weights, const V& x) {
  GrowthFieldT<V> f;
  f.m_max = static_cast<int>(weights.size());
  f.N = static_cast<int>(x.size());
  f.boundary = x;
  f.values.assign(f.m_max, V(f.N));
  for (int m = 1; m <= f.m_max; ++m) {
    for (int n = 1; n <= f.N; ++n) {
      auto up = f.at(m - 1, n);
      auto left = f.at(m, n - 1);
      f.values[m - 1][n - 1] = std::max(up, left) + weights[m - 1][n - 1];
    }
  }
  return f;
}
}  // namespace

GrowthField grow(const std::vector<IntVector>& weights, const IntVector& x) {
  require_weyl(x);
  return grow_impl(weights, x);
}

GrowthField grow(const ParamSet& p, const IntVector& x, int m, uint64_t seed) {
  return grow(sample_weights_geometric(p, m, static_cast<int>(x.size()), seed), x);
}

GrowthFieldReal grow(const std::vector<RealVector>& weights, const RealVector& x) {
  require_weyl(x);
  return grow_impl(weights, x);
}

double height_interface(const GrowthField& field, double x, int t) {
  if (t < 1) throw std::out_of_range("height_interface: t must be >= 1");
  auto lattice = [&](long long xi) -> double {
    // requires xi + t odd and |xi| < t
    long long mm = (t + xi + 1) / 2;
    long long nn = (t - xi + 1) / 2;
    if (mm < 1 || nn < 1 || mm > field.m_max || nn > field.N)
      throw std::out_of_range("height_interface: query outside populated cone");
    return static_cast<double>(field.at(static_cast<int>(mm), static_cast<int>(nn)));
  };
  // lattice points at this t are the x with x + t odd; step between them is 2
  long long xl = static_cast<long long>(std::floor(x));
  if (((xl + t) % 2 + 2) % 2 == 0) xl -= 1;
  double xa = static_cast<double>(xl);
  if (x == xa) return lattice(xl);
  double fa = lattice(xl);
  double fb = lattice(xl + 2);
  return fa + (x - xa) / 2.0 * (fb - fa);
}

}  // namespace lppkit
