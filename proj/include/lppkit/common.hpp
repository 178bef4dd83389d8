#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lppkit {

using Complex = std::complex<double>;
using Rat = boost::multiprecision::mpq_rational;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Thrown when a computed quantity fails a numerical self-check (imaginary
// residual, truncation monitor, probability range, ...). Distinct from
// std::invalid_argument so callers can map it to a dedicated exit code.
class numerical_error : public std::runtime_error {
public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

template <class T>
bool weakly_increasing(const std::vector<T>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

}  // namespace lppkit
