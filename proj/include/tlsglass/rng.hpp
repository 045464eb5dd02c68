#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "tlsglass/vec3.hpp"

namespace tlsglass {

// Stable 64-bit mix of (stream seed, index). Used to derive per-sample,
// per-restart and per-chain seeds so batches are order-independent and
// parallelizable.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// mt19937_64 core with hand-rolled distributions. The standard pins down the
// raw mt19937_64 output but not the library distributions, so uniform/normal
// draws are built here from raw bits to keep results bit-reproducible across
// toolchains.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // [0, n)
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Box-Muller, zero mean.
  double normal(double sigma) {
    if (have_spare_) {
      have_spare_ = false;
      return spare_ * sigma;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a) * sigma;
  }

  // Area-uniform direction on the unit sphere.
  Vec3 unit_vector() {
    const double z = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586476925286766559);
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {s * std::cos(phi), s * std::sin(phi), z};
  }

  // Fisher-Yates over [0, n); fills perm.
  template <typename Int>
  void permutation(std::vector<Int>& perm, Int n) {
    perm.resize(static_cast<size_t>(n));
    for (Int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    for (Int i = n - 1; i > 0; --i) {
      const auto j = static_cast<Int>(below(static_cast<uint64_t>(i) + 1));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tlsglass
