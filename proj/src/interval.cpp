#include "ordex/interval.hpp"

#include <utility>

namespace ordex {

namespace {

void require_open_dense(const Interval& interval, const char* op) {
  if (!interval.descriptor().is_dense()) {
    throw DomainError(std::string(op) + " requires a dense carrier, got " + interval.descriptor().name());
  }
  if (!interval.is_open()) throw DomainError(std::string(op) + " requires open intervals");
}

Element max_element(const Element& x, const Element& y) { return x < y ? y : x; }
Element min_element(const Element& x, const Element& y) { return x < y ? x : y; }

}  // namespace

Interval::Interval(Element lo, Element hi, bool lo_open, bool hi_open)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_open_(lo_open), hi_open_(hi_open) {
  if (!(lo_.descriptor() == hi_.descriptor())) {
    throw DescriptorMismatch("interval endpoints from different carriers");
  }
  const auto order = compare(lo_, hi_);
  if (order == std::strong_ordering::greater) throw DomainError("interval endpoints out of order");
  if (order == std::strong_ordering::equal && (lo_open_ || hi_open_)) {
    throw DomainError("empty interval");
  }
}

Interval Interval::open(Element lo, Element hi) { return Interval(std::move(lo), std::move(hi), true, true); }

Interval Interval::left_closed(Element lo, Element hi) {
  return Interval(std::move(lo), std::move(hi), false, true);
}

Interval Interval::right_closed(Element lo, Element hi) {
  return Interval(std::move(lo), std::move(hi), true, false);
}

Interval Interval::closed(Element lo, Element hi) {
  return Interval(std::move(lo), std::move(hi), false, false);
}

bool Interval::contains(const Element& x) const {
  const auto lo_cmp = compare(lo_, x);
  if (lo_open_ ? lo_cmp != std::strong_ordering::less : lo_cmp == std::strong_ordering::greater) return false;
  const auto hi_cmp = compare(x, hi_);
  return hi_open_ ? hi_cmp == std::strong_ordering::less : hi_cmp != std::strong_ordering::greater;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo_open_ == b.lo_open_ && a.hi_open_ == b.hi_open_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
}

Interval translate(const Element& gamma, const Interval& interval) {
  return Interval(gamma + interval.lo(), gamma + interval.hi(), interval.lo_open(), interval.hi_open());
}

Interval interval_sum(const Interval& lhs, const Interval& rhs) {
  require_open_dense(lhs, "interval_sum");
  require_open_dense(rhs, "interval_sum");
  return Interval::open(lhs.lo() + rhs.lo(), lhs.hi() + rhs.hi());
}

std::pair<Element, Element> split_sum(const Element& x, const Interval& lhs, const Interval& rhs) {
  const Interval sum = interval_sum(lhs, rhs);
  if (!sum.contains(x)) throw DomainError("element outside the sum interval");
  // u must lie in ]lo,hi[ with lo = max(lhs.lo, x-rhs.hi), hi = min(lhs.hi, x-rhs.lo);
  // that intersection is open and nonempty exactly because x is in the sum.
  const Element lo = max_element(lhs.lo(), x - rhs.hi());
  const Element hi = min_element(lhs.hi(), x - rhs.lo());
  Element u = rat_scale(Rat(1, 2), x);
  if (!(lo < u && u < hi)) u = dense_witness(lo, hi);
  return {u, x - u};
}

Interval scale(const Element& gamma, const Interval& interval) {
  if (!gamma.descriptor().is_field()) throw DomainError("scale requires a field carrier");
  if (!gamma.is_positive()) throw DomainError("scale requires a positive factor");
  return Interval(gamma * interval.lo(), gamma * interval.hi(), interval.lo_open(), interval.hi_open());
}

Interval interval_product(const Interval& lhs, const Interval& rhs) {
  require_open_dense(lhs, "interval_product");
  require_open_dense(rhs, "interval_product");
  if (!lhs.lo().is_positive() || !rhs.lo().is_positive()) {
    throw DomainError("interval_product requires positive endpoints");
  }
  return Interval::open(lhs.lo() * rhs.lo(), lhs.hi() * rhs.hi());
}

std::pair<Element, Element> split_product(const Element& x, const Interval& lhs, const Interval& rhs) {
  const Interval product = interval_product(lhs, rhs);
  if (!product.contains(x)) throw DomainError("element outside the product interval");
  const Element lo = max_element(lhs.lo(), x / rhs.hi());
  const Element hi = min_element(lhs.hi(), x / rhs.lo());
  const Element u = dense_witness(lo, hi);
  return {u, x / u};
}

std::string to_string(const Interval& interval) {
  std::string out;
  out += interval.lo_open() ? ']' : '[';
  out += to_string(interval.lo());
  out += ',';
  out += to_string(interval.hi());
  out += interval.hi_open() ? '[' : ']';
  return out;
}

Interval parse_interval(std::string_view text, const Descriptor& desc) {
  if (text.size() < 5) throw ParseError("cannot parse interval: " + std::string(text));
  const char open_ch = text.front();
  const char close_ch = text.back();
  if ((open_ch != ']' && open_ch != '[') || (close_ch != '[' && close_ch != ']')) {
    throw ParseError("cannot parse interval: " + std::string(text));
  }
  const std::string_view inner = text.substr(1, text.size() - 2);
  const std::size_t comma = inner.find(',');
  if (comma == std::string_view::npos) throw ParseError("cannot parse interval: " + std::string(text));
  Element lo = parse_element(inner.substr(0, comma), desc);
  Element hi = parse_element(inner.substr(comma + 1), desc);
  const bool lo_open = open_ch == ']';
  const bool hi_open = close_ch == '[';
  if (lo_open && hi_open) return Interval::open(std::move(lo), std::move(hi));
  if (hi_open) return Interval::left_closed(std::move(lo), std::move(hi));
  if (lo_open) return Interval::right_closed(std::move(lo), std::move(hi));
  return Interval::closed(std::move(lo), std::move(hi));
}

}  // namespace ordex
