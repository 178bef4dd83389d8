#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lppkit {

// Truncated Taylor expansion around a point: c[0] + c[1] t + ... + c[n-1] t^{n-1}.
// Scalar type T can be double, std::complex<double>, or an exact rational,
// so the same residue machinery runs in float mode and in exact mode.
template <class T>
class Jet {
public:
  explicit Jet(size_t order) : c_(order, T(0)) {}

  static Jet constant(const T& v, size_t order) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }
  // v0 + t
  static Jet variable(const T& v0, size_t order) {
    Jet j(order);
    j.c_[0] = v0;
    if (order > 1) j.c_[1] = T(1);
    return j;
  }

  size_t order() const { return c_.size(); }
  const T& operator[](size_t k) const { return c_[k]; }
  T& operator[](size_t k) { return c_[k]; }

  Jet operator+(const Jet& o) const {
    Jet r(order());
    for (size_t k = 0; k < order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
  }
  Jet operator-(const Jet& o) const {
    Jet r(order());
    for (size_t k = 0; k < order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
  }
  Jet operator*(const Jet& o) const {
    Jet r(order());
    for (size_t i = 0; i < order(); ++i) {
      if (c_[i] == T(0)) continue;
      for (size_t j = 0; i + j < order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
  }
  Jet operator*(const T& s) const {
    Jet r(order());
    for (size_t k = 0; k < order(); ++k) r.c_[k] = c_[k] * s;
    return r;
  }

  // 1 / this; requires an invertible constant term.
  Jet reciprocal() const {
    if (c_[0] == T(0)) throw std::invalid_argument("Jet::reciprocal: zero constant term");
    Jet r(order());
    T inv0 = T(1) / c_[0];
    r.c_[0] = inv0;
    for (size_t k = 1; k < order(); ++k) {
      T acc(0);
      for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -inv0 * acc;
    }
    return r;
  }

  Jet pow(long e) const {
    if (e < 0) return reciprocal().pow(-e);
    Jet acc = constant(T(1), order());
    Jet base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  // exp of a jet; meaningful for floating scalar types only.
  Jet exp_jet() const {
    Jet r(order());
    using std::exp;
    r.c_[0] = exp(c_[0]);
    for (size_t k = 1; k < order(); ++k) {
      T acc(0);
      for (size_t j = 1; j <= k; ++j) acc += T(double(j)) * c_[j] * r.c_[k - j];
      r.c_[k] = acc / T(double(k));
    }
    return r;
  }

private:
  std::vector<T> c_;
};

}  // namespace lppkit
