#pragma once

#include <cmath>
#include <cstdint>

namespace lppkit {

// Philox4x32-10 counter-based generator. Streams are pure functions of
// (seed, counter), so weight draws can be assigned to lattice cells and
// sample indices without coordinating between threads: the draw for cell
// (i,j) of sample s is philox(seed, {i, j, lo(s), hi(s)}) no matter which
// worker asks for it or in what order.
struct Philox4x32 {
  static inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
    uint64_t p = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(p >> 32);
    lo = static_cast<uint32_t>(p);
  }

  // One 128-bit block keyed by a 64-bit seed.
  static inline void block(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3,
                           uint32_t out[4]) {
    uint32_t k0 = static_cast<uint32_t>(seed);
    uint32_t k1 = static_cast<uint32_t>(seed >> 32);
    for (int round = 0; round < 10; ++round) {
      uint32_t hi0, lo0, hi1, lo1;
      mulhilo(0xD2511F53u, c0, hi0, lo0);
      mulhilo(0xCD9E8D57u, c2, hi1, lo1);
      uint32_t n0 = hi1 ^ c1 ^ k0;
      uint32_t n1 = lo1;
      uint32_t n2 = hi0 ^ c3 ^ k1;
      uint32_t n3 = lo0;
      c0 = n0; c1 = n1; c2 = n2; c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
  }

  static inline uint64_t bits64(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3) {
    uint32_t o[4];
    block(seed, c0, c1, c2, c3, o);
    return (static_cast<uint64_t>(o[0]) << 32) | o[1];
  }

  // Uniform in (0,1): 53 random bits plus a half-ulp offset keeps 0 out.
  static inline double uniform(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3) {
    uint64_t b = bits64(seed, c0, c1, c2, c3);
    return (static_cast<double>(b >> 11) + 0.5) * (1.0 / 9007199254740992.0);
  }
};

// Uniform draw for lattice cell (i,j) of sample `s` (1-based cell indices).
inline double cell_uniform(uint64_t seed, uint32_t i, uint32_t j, uint64_t s) {
  return Philox4x32::uniform(seed, i, j, static_cast<uint32_t>(s), static_cast<uint32_t>(s >> 32));
}

// Geom(p): P(w = k) = (1-p) p^k via inverse CDF. p -> 0 degenerates to the
// point mass at 0.
inline long long geometric_from_uniform(double u, double p) {
  if (p <= 0.0) return 0;
  double v = std::log1p(-u) / std::log(p);
  long long k = static_cast<long long>(std::floor(v));
  if (k < 0) k = 0;
  return k;
}

// Exp(rate) via inverse CDF.
inline double exponential_from_uniform(double u, double rate) {
  return -std::log1p(-u) / rate;
}

}  // namespace lppkit
