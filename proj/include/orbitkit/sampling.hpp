#pragma once

#include <cstdint>
#include <random>

#include "orbitkit/mat.hpp"
#include "orbitkit/structvec.hpp"

namespace orbitkit {

// Deterministic seeded sampler.  Integer draws use explicit modulo mapping so
// the stream is identical across platforms (std::uniform_int_distribution is
// implementation-defined).
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) {  // inclusive bounds
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }

  Rat small_int() { return Rat(int_in(-9, 9)); }

  Rat nonzero_small_int() {
    Rat r = small_int();
    while (r.is_zero()) r = small_int();
    return r;
  }

  Rat small_rat() {  // numerator in [-9,9], denominator in [1,9]
    return Rat(int_in(-9, 9), int_in(1, 9));
  }

  Rat nonzero_small_rat() {
    Rat r = small_rat();
    while (r.is_zero()) r = small_rat();
    return r;
  }

  // Entries uniform on integers in [-9, 9]; resample until det != 0.
  MatQ invertible(std::size_t n) {
    for (;;) {
      MatQ g(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = small_int();
      if (!g.det().is_zero()) return g;
    }
  }

  StructVecQ structvec(std::size_t n) {
    StructVecQ lam(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) lam.at(i, j, k) = small_int();
    return lam;
  }

  MatQ symmetric(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Rat v = small_int();
        m(i, j) = v;
        m(j, i) = v;
      }
    return m;
  }

  std::mt19937_64& raw() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace orbitkit
