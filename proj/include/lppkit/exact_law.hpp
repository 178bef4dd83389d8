#pragma once

#include <map>
#include <vector>

#include "lppkit/common.hpp"
#include "lppkit/model.hpp"

namespace lppkit {

// Exact rational law of the chain vector after m steps, computed by dynamic
// programming with each geometric weight truncated at `cutoff`. Masses on the
// retained support are exact for the sub-probability measure
// P(state = y, all weights <= cutoff); in particular they equal the true
// masses whenever y_N <= cutoff, because every weight in the rectangle is
// dominated by the last passage value.
struct ExactLaw {
  int N = 0;
  std::map<IntVector, Rat> mass;
  Rat truncation_error;  // 1 - P(all weights <= cutoff), exact

  Rat mass_at(const IntVector& y) const {
    auto it = mass.find(y);
    return it == mass.end() ? Rat(0) : it->second;
  }
  Rat total() const {
    Rat s(0);
    for (auto& kv : mass) s += kv.second;
    return s;
  }
  // P(G(m, N) <= t) restricted to the retained weight box; exact for t <= cutoff.
  Rat cdf_last(long long t) const {
    Rat s(0);
    for (auto& kv : mass)
      if (kv.first.back() <= t) s += kv.second;
    return s;
  }
};

ExactLaw exact_law_dp(const RationalParams& p, const IntVector& x, int m, int cutoff);

// Exact joint probability P(G(m,n) < h, G(M,N) < H | x) over the truncated
// weight box. Exact whenever H <= cutoff (same domination argument).
Rat two_time_law_dp(const RationalParams& p, const IntVector& x, int m, int n, long long h, int M,
                    long long H, int cutoff);

}  // namespace lppkit
