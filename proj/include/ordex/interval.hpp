#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "ordex/element.hpp"

namespace ordex {

/// An interval with exact endpoints and independently open or closed ends.
/// The public algebra below works on open intervals ]lo,hi[; the half-open
/// forms exist for the remainder windows of Euclidean division.
class Interval {
 public:
  static Interval open(Element lo, Element hi);        // ]lo,hi[
  static Interval left_closed(Element lo, Element hi);  // [lo,hi[
  static Interval right_closed(Element lo, Element hi); // ]lo,hi]
  static Interval closed(Element lo, Element hi);       // [lo,hi]

  const Element& lo() const { return lo_; }
  const Element& hi() const { return hi_; }
  bool lo_open() const { return lo_open_; }
  bool hi_open() const { return hi_open_; }
  bool is_open() const { return lo_open_ && hi_open_; }

  const Descriptor& descriptor() const { return lo_.descriptor(); }

  /// Exact membership test.
  bool contains(const Element& x) const;

  friend bool operator==(const Interval& a, const Interval& b);
  friend Interval translate(const Element& gamma, const Interval& interval);
  friend Interval scale(const Element& gamma, const Interval& interval);

 private:
  Interval(Element lo, Element hi, bool lo_open, bool hi_open);

  Element lo_;
  Element hi_;
  bool lo_open_;
  bool hi_open_;
};

/// gamma + ]lo,hi[ = ]gamma+lo,gamma+hi[; holds in every ordered carrier.
Interval translate(const Element& gamma, const Interval& interval);

/// ]a,b[ + ]c,d[ = ]a+c,b+d[. Requires open intervals over a dense carrier;
/// over the integers the law fails and the operation refuses.
Interval interval_sum(const Interval& lhs, const Interval& rhs);

/// A witness pair (u, v) with u in lhs, v in rhs, and u + v = x. Requires
/// x inside interval_sum(lhs, rhs). Deterministic: u is x/2 clamped into
/// the admissible open range, falling back to its midpoint.
std::pair<Element, Element> split_sum(const Element& x, const Interval& lhs, const Interval& rhs);

/// gamma * ]lo,hi[ = ]gamma*lo,gamma*hi[ for gamma > 0 in a field carrier.
Interval scale(const Element& gamma, const Interval& interval);

/// ]a,b[ * ]c,d[ = ]ac,bd[ for open intervals with positive endpoints.
Interval interval_product(const Interval& lhs, const Interval& rhs);

/// A witness pair (u, v) with u in lhs, v in rhs, u * v = x. Requires x
/// inside interval_product(lhs, rhs). Deterministic: u is the midpoint of
/// the admissible range, v = x/u.
std::pair<Element, Element> split_product(const Element& x, const Interval& lhs, const Interval& rhs);

/// "]lo,hi[" with closed ends rendered as brackets: "[lo,hi[", "]lo,hi]".
std::string to_string(const Interval& interval);

Interval parse_interval(std::string_view text, const Descriptor& desc);

}  // namespace ordex
