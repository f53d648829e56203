#include "ordex/rng.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "ordex/errors.hpp"

namespace ordex {
namespace {

// j/N grid used to place points inside dense intervals.
constexpr std::uint64_t kGrid = 1u << 20;

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("empty sampling range");
  // 2^64 mod bound; raw values above it map to residues without bias.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = raw();
    if (r >= threshold) return r % bound;
  }
}

Int Rng::int_in(const Int& lo, const Int& hi) {
  if (lo > hi) throw DomainError("empty integer range");
  const Int range = hi - lo + 1;
  const unsigned bits = boost::multiprecision::msb(range) + 1;
  for (;;) {
    Int v = 0;
    unsigned remaining = bits;
    while (remaining >= 64) {
      v <<= 64;
      v += raw();
      remaining -= 64;
    }
    if (remaining > 0) {
      v <<= remaining;
      v += raw() >> (64 - remaining);
    }
    if (v < range) return lo + v;
  }
}

Rat Rng::small_rat(std::uint64_t mag, std::uint64_t den_mag) {
  const Int num = int_in(-Int(mag), Int(mag));
  const Int den = Int(1 + below(den_mag));
  return make_rat(num, den);
}

Element Rng::random_element(const Descriptor& desc, std::uint64_t mag) {
  switch (desc.kind()) {
    case Carrier::integers:
      return Element::integer(desc, int_in(-Int(mag), Int(mag)));
    case Carrier::rationals:
      return Element::rational(desc, small_rat(mag));
    case Carrier::quadratic:
      return Element::quadratic(desc, small_rat(mag), small_rat(mag));
  }
  throw DomainError("unknown carrier");
}

Element Rng::element_in(const Interval& window) {
  const Descriptor& desc = window.descriptor();
  if (desc.kind() == Carrier::integers) {
    Int lo = window.lo().int_value();
    Int hi = window.hi().int_value();
    if (window.lo_open()) lo += 1;
    if (window.hi_open()) hi -= 1;
    if (lo > hi) throw DomainError("interval holds no integer point");
    return Element::integer(desc, int_in(lo, hi));
  }
  // Dense carrier: lo + (j/N)(hi - lo) with j chosen so open ends stay
  // strict. Endpoints coincide only in closed degenerate intervals.
  if (window.lo() == window.hi()) return window.lo();
  const std::uint64_t j_lo = window.lo_open() ? 1 : 0;
  const std::uint64_t j_hi = window.hi_open() ? kGrid - 1 : kGrid;
  const std::uint64_t j = j_lo + below(j_hi - j_lo + 1);
  const Rat t = make_rat(Int(j), Int(kGrid));
  return window.lo() + rat_scale(t, window.hi() - window.lo());
}

}  // namespace ordex
