#pragma once

#include <cstdint>
#include <random>

#include "ordex/element.hpp"
#include "ordex/interval.hpp"
#include "ordex/numeric.hpp"

namespace ordex {

// Deterministic sampler.  All reduction from raw engine output to ranges is
// done here rather than with std distributions, so a fixed seed yields the
// same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, bound), bound > 0.  Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi] over arbitrary-precision integers, lo <= hi.
  Int int_in(const Int& lo, const Int& hi);

  bool coin() { return (raw() & 1u) != 0; }

  // Rational with numerator in [-mag, mag] and denominator in [1, den_mag].
  Rat small_rat(std::uint64_t mag = 1000, std::uint64_t den_mag = 60);

  // Element of the given carrier with small coordinates.
  Element random_element(const Descriptor& desc, std::uint64_t mag = 1000);

  // Element strictly inside the interval for open ends, inclusive for closed
  // ones.  Dense carriers pick lo + t*(hi - lo) with t = j/N; the integers
  // carrier counts admissible points directly.
  Element element_in(const Interval& window);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ordex
