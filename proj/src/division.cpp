#include "ordex/division.hpp"

#include "ordex/errors.hpp"

namespace ordex {
namespace {

// Greatest q >= 0 with q*w <= x, for w > 0, x >= 0.
Int floor_quotient_nonneg(const Element& x, const Element& w) {
  if (compare(x, w) == std::strong_ordering::less) return 0;
  // Doubling: lo*w <= x < hi*w with hi = 2*lo.
  Int lo = 1;
  Int hi = 2;
  Element cur = w;
  for (;;) {
    Element next = cur + cur;
    if (compare(x, next) == std::strong_ordering::less) break;
    cur = next;
    lo = hi;
    hi <<= 1;
  }
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    if (compare(int_scale(mid, w), x) != std::strong_ordering::greater) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

// Greatest z with y^z <= x, for y > 1, x > 0.
Int floor_log(const Element& y, const Element& x) {
  const Element one = Element::one(y.descriptor());
  if (compare(x, one) == std::strong_ordering::less) {
    const Element xr = inverse(x);
    const Int g = floor_log(y, xr);
    if (pow(y, g) == xr) return -g;
    return -g - 1;
  }
  if (compare(x, y) == std::strong_ordering::less) return 0;
  Int lo = 1;
  Int hi = 2;
  Element cur = y;
  for (;;) {
    Element next = cur * cur;
    if (compare(x, next) == std::strong_ordering::less) break;
    cur = next;
    lo = hi;
    hi <<= 1;
  }
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    if (compare(pow(y, mid), x) != std::strong_ordering::greater) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

Int archimedean_bound(const Element& x, const Element& y) {
  if (!x.is_positive() || !y.is_positive()) {
    throw DomainError("archimedean_bound requires positive arguments");
  }
  Int lo = 0;
  Int hi = 1;
  Element cur = x;
  while (compare(cur, y) != std::strong_ordering::greater) {
    cur = cur + cur;
    lo = hi;
    hi <<= 1;
  }
  while (hi - lo > 1) {
    const Int mid = lo + (hi - lo) / 2;
    if (compare(int_scale(mid, x), y) == std::strong_ordering::greater) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

DivisionResult euclidean_div(const Element& x, const Element& y) {
  if (y.is_zero()) throw DomainError("division by zero element");
  const Element w = abs(y);
  Int q0;
  if (x.is_zero()) {
    q0 = 0;
  } else if (x.is_positive()) {
    q0 = floor_quotient_nonneg(x, w);
  } else {
    const Int m = floor_quotient_nonneg(-x, w);
    // -(m+1)w < x <= -mw; exact multiples keep r = 0.
    if (x == int_scale(-m, w)) {
      q0 = -m;
    } else {
      q0 = -m - 1;
    }
  }
  Element r = x - int_scale(q0, w);
  const Int q = y.is_positive() ? q0 : Int(-q0);
  return DivisionResult{q, std::move(r)};
}

std::pair<Int, Int> bernoulli_bounds(const Element& x, const Element& y) {
  if (!x.is_positive() || !y.is_positive()) {
    throw DomainError("bernoulli_bounds requires positive arguments");
  }
  const Element one = Element::one(x.descriptor());
  if (x == one) throw DomainError("bernoulli_bounds requires base != 1");
  if (compare(x, one) == std::strong_ordering::less) {
    const auto [m, n] = bernoulli_bounds(inverse(x), y);
    return {-n, -m};
  }
  if (y == one) return {Int(-1), Int(1)};
  // x > 1. Upper exponent by exponent doubling with exact squaring.
  const auto upper = [&](const Element& target) {
    Int k = 1;
    Element p = x;
    while (compare(p, target) != std::strong_ordering::greater) {
      p = p * p;
      k <<= 1;
    }
    return k;
  };
  if (compare(y, one) == std::strong_ordering::greater) {
    return {Int(0), upper(y)};
  }
  return {-upper(inverse(y)), Int(1)};
}

DivisionResult multiplicative_div(const Element& x, const Element& y) {
  if (!x.descriptor().is_field()) {
    throw DomainError("multiplicative division requires a field carrier");
  }
  if (!x.is_positive() || !y.is_positive()) {
    throw DomainError("multiplicative division requires positive arguments");
  }
  const Element one = Element::one(x.descriptor());
  if (y == one) throw DomainError("division by the unit element");
  if (compare(y, one) == std::strong_ordering::less) {
    DivisionResult res = multiplicative_div(x, inverse(y));
    if (res.remainder == one) {
      return DivisionResult{-res.quotient, res.remainder};
    }
    // r' in ]1, 1/y[ maps to y*r' in ]y, 1[; window (y, 1].
    return DivisionResult{-res.quotient - 1, y * res.remainder};
  }
  const Int z = floor_log(y, x);
  Element r = x / pow(y, z);
  return DivisionResult{z, std::move(r)};
}

}  // namespace ordex
