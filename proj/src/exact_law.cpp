#include "lppkit/exact_law.hpp"

#include <algorithm>
#include <stdexcept>

namespace lppkit {

namespace {

using Measure = std::map<IntVector, Rat>;

// One chain step under rates p_n = a_step * b_n, every weight truncated at
// cutoff. Coordinates are updated left to right: y_n = max(u_n, y_{n-1}) + w,
// with y_1 = u_1 + w.
Measure dp_step(const Measure& mu, const RationalParams& p, int step, int cutoff) {
  int N = static_cast<int>(p.b.size());
  Measure cur = mu;
  for (int n = 1; n <= N; ++n) {
    Rat rate = p.a.at(step - 1) * p.b.at(n - 1);
    // pmf[k] = (1-rate) rate^k
    std::vector<Rat> pmf(cutoff + 1);
    Rat pw(1);
    for (int k = 0; k <= cutoff; ++k) {
      pmf[k] = (Rat(1) - rate) * pw;
      pw *= rate;
    }
    Measure next;
    for (const auto& [state, mass] : cur) {
      long long base = (n == 1) ? state[0] : std::max(state[n - 1], state[n - 2]);
      IntVector ns = state;
      for (int k = 0; k <= cutoff; ++k) {
        ns[n - 1] = base + k;
        next[ns] += mass * pmf[k];
      }
    }
    cur.swap(next);
  }
  return cur;
}

Rat kept_mass(const RationalParams& p, int m, int N, int cutoff) {
  Rat kept(1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= N; ++j) kept *= Rat(1) - rat_pow(p.rate(i, j), cutoff + 1);
  return kept;
}

}  // namespace

ExactLaw exact_law_dp(const RationalParams& p, const IntVector& x, int m, int cutoff) {
  p.validate();
  require_weyl(x);
  if (m < 1 || cutoff < 0) throw std::invalid_argument("exact_law_dp: need m >= 1, cutoff >= 0");
  int N = static_cast<int>(x.size());
  if (static_cast<int>(p.b.size()) != N || static_cast<int>(p.a.size()) < m)
    throw std::invalid_argument("exact_law_dp: parameter vectors too short");

  Measure mu;
  mu[x] = Rat(1);
  for (int step = 1; step <= m; ++step) mu = dp_step(mu, p, step, cutoff);

  ExactLaw law;
  law.N = N;
  law.mass = std::move(mu);
  law.truncation_error = Rat(1) - kept_mass(p, m, N, cutoff);
  return law;
}

Rat two_time_law_dp(const RationalParams& p, const IntVector& x, int m, int n, long long h, int M,
                    long long H, int cutoff) {
  p.validate();
  require_weyl(x);
  if (!(m >= 1 && m < M && n >= 1)) throw std::invalid_argument("two_time_law_dp: need 1 <= m < M");
  int N = static_cast<int>(x.size());
  if (n > N) throw std::invalid_argument("two_time_law_dp: n out of range");

  Measure mu;
  mu[x] = Rat(1);
  for (int step = 1; step <= m; ++step) mu = dp_step(mu, p, step, cutoff);
  Measure restricted;
  for (const auto& [state, mass] : mu)
    if (state[n - 1] < h) restricted[state] = mass;
  for (int step = m + 1; step <= M; ++step) restricted = dp_step(restricted, p, step, cutoff);
  Rat prob(0);
  for (const auto& [state, mass] : restricted)
    if (state[N - 1] < H) prob += mass;
  return prob;
}

}  // namespace lppkit
