#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lppkit/common.hpp"
#include "lppkit/jet.hpp"

namespace lppkit {

// value(z) = coeff * exp(gamma z) * poly(z) * prod_k (z - c_k)^{e_k}.
// Negative exponents are poles; equal centers merge. Closed under every
// integrand in the finite-size formulas, so one residue routine serves the
// geometric model (gamma = 0, rational scalars allowed) and the exponential
// model (gamma != 0, complex scalars).
template <class T>
struct FactoredRational {
  T coeff = T(1);
  T gamma = T(0);                         // exp(gamma z); keep 0 for exact scalars
  std::vector<T> poly;                    // optional polynomial factor, coefficient list; empty = 1
  std::vector<std::pair<T, long>> factors;  // (center, exponent)

  void push(const T& center, long e) {
    if (e == 0) return;
    for (auto& f : factors)
      if (f.first == center) {
        f.second += e;
        if (f.second == 0) {
          f.first = factors.back().first;
          f.second = factors.back().second;
          factors.pop_back();
        }
        return;
      }
    factors.emplace_back(center, e);
  }

  T eval(const T& z) const {
    T v = coeff;
    if (!poly.empty()) {
      T acc(0);
      for (size_t k = poly.size(); k-- > 0;) acc = acc * z + poly[k];
      v *= acc;
    }
    for (const auto& [c, e] : factors) {
      T base = z - c;
      T p(1);
      long n = e > 0 ? e : -e;
      for (long q = 0; q < n; ++q) p *= base;
      v = e > 0 ? v * p : v / p;
    }
    if (gamma != T(0)) {
      if constexpr (std::is_same_v<T, Rat>) {
        throw std::logic_error("FactoredRational: exp factor not available in exact mode");
      } else {
        v *= std::exp(gamma * z);
      }
    }
    return v;
  }

  // Taylor jet of the product of all factors except `skip` around z0.
  Jet<T> jet_at(const T& z0, size_t order, size_t skip) const {
    Jet<T> acc = Jet<T>::constant(coeff, order);
    if (!poly.empty()) {
      // Taylor-shift the polynomial to z0 via synthetic division
      std::vector<T> w = poly;
      Jet<T> pj(order);
      for (size_t k = 0; k < order && !w.empty(); ++k) {
        // remainder of w on division by (z - z0)
        T rem(0);
        for (size_t q = w.size(); q-- > 0;) rem = rem * z0 + w[q];
        pj[k] = rem;
        // quotient
        std::vector<T> quot(w.size() > 1 ? w.size() - 1 : 0, T(0));
        T carry(0);
        for (size_t q = w.size(); q-- > 1;) {
          carry = w[q] + carry * z0;
          quot[q - 1] = carry;
        }
        w = std::move(quot);
      }
      acc = acc * pj;
    }
    for (size_t idx = 0; idx < factors.size(); ++idx) {
      if (idx == skip) continue;
      const auto& [c, e] = factors[idx];
      acc = acc * Jet<T>::variable(z0 - c, order).pow(e);
    }
    if (gamma != T(0)) {
      if constexpr (std::is_same_v<T, Rat>) {
        throw std::logic_error("FactoredRational: exp factor not available in exact mode");
      } else {
        Jet<T> ex(order);
        ex[0] = gamma * z0;
        if (order > 1) ex[1] = gamma;
        acc = acc * ex.exp_jet();
      }
    }
    return acc;
  }

  T residue_at_index(size_t idx) const {
    const auto& [c, e] = factors.at(idx);
    if (e >= 0) return T(0);
    size_t mult = static_cast<size_t>(-e);
    // Laurent coefficient of (z-c)^{-1}: the (mult-1)-th Taylor coefficient of
    // the remaining factors. Jet coefficients already carry the 1/k!.
    Jet<T> j = jet_at(c, mult, idx);
    return j[mult - 1];
  }

  T residue_at(const T& center) const {
    for (size_t idx = 0; idx < factors.size(); ++idx)
      if (factors[idx].first == center) return residue_at_index(idx);
    return T(0);
  }

  // Sum of residues at the enclosed pole centers.
  template <class Pred>
  T sum_residues(Pred enclosed) const {
    T acc(0);
    for (size_t idx = 0; idx < factors.size(); ++idx)
      if (factors[idx].second < 0 && enclosed(factors[idx].first)) acc += residue_at_index(idx);
    return acc;
  }
};

// Residue sum of numerator(z) / prod (z - root)^mult over the enclosed roots.
// Exact for rational inputs; the oracle counterpart of every circle integral
// of a rational integrand.
template <class T>
T residue_sum_rational(const std::vector<T>& numerator,
                       const std::vector<std::pair<T, long>>& denominator_factors,
                       const std::vector<T>& enclosed) {
  FactoredRational<T> f;
  f.poly = numerator;
  for (size_t i = 0; i < denominator_factors.size(); ++i) {
    if (denominator_factors[i].second <= 0)
      throw std::invalid_argument("residue_sum_rational: multiplicities must be positive");
    for (size_t j = i + 1; j < denominator_factors.size(); ++j)
      if (denominator_factors[i].first == denominator_factors[j].first)
        throw std::invalid_argument("residue_sum_rational: repeated root listed twice");
    f.push(denominator_factors[i].first, -denominator_factors[i].second);
  }
  for (const T& e : enclosed) {
    bool known = false;
    for (const auto& [root, mult] : denominator_factors)
      if (root == e) known = true;
    if (!known) throw std::invalid_argument("residue_sum_rational: enclosed point is not a listed root");
  }
  return f.sum_residues([&](const T& c) {
    return std::find(enclosed.begin(), enclosed.end(), c) != enclosed.end();
  });
}

}  // namespace lppkit
