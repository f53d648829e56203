#pragma once

#include <utility>

#include "ordex/element.hpp"
#include "ordex/numeric.hpp"

namespace ordex {

/// Additive: x = int_scale(quotient, y) + remainder with 0 <= r < |y|.
/// Multiplicative: x = y^quotient * remainder with r in the canonical
/// half-open window around 1.
struct DivisionResult {
  Int quotient;
  Element remainder;
};

/// Least n >= 1 with y < n*x. Requires x > 0, y > 0. Exponential doubling
/// followed by binary search on the last doubling bracket; only comparisons
/// and repeated addition, so it is valid in every Archimedean carrier.
Int archimedean_bound(const Element& x, const Element& y);

/// Unique (q, r) with x = qy + r and 0 <= r < |y|. Requires y != 0. Works
/// in the group reduct: no field division anywhere in the search.
DivisionResult euclidean_div(const Element& x, const Element& y);

/// Integers m < n with y strictly between x^m and x^n (x^m < y < x^n when
/// x > 1, reversed orientation when x < 1). Requires x > 0, x != 1, y > 0.
/// Any valid bracket may be returned, not necessarily the tightest.
std::pair<Int, Int> bernoulli_bounds(const Element& x, const Element& y);

/// Unique (z, r) with x = y^z * r and r in the canonical window:
/// 1 <= r < y when y > 1, and y < r <= 1 when y < 1. Requires x > 0,
/// y > 0, y != 1, and a field carrier.
DivisionResult multiplicative_div(const Element& x, const Element& y);

}  // namespace ordex
