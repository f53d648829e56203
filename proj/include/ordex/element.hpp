#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "ordex/errors.hpp"
#include "ordex/numeric.hpp"

namespace ordex {

enum class Carrier : std::uint8_t { integers, rationals, quadratic };

/// Identifies a concrete carrier: Z, Q, or Q(sqrt(d)) for square-free d >= 2.
/// Every element carries its descriptor; operations refuse to mix carriers.
class Descriptor {
 public:
  static Descriptor integers();
  static Descriptor rationals();
  static Descriptor quadratic(std::int64_t d);

  Carrier kind() const { return kind_; }

  /// The radicand; only meaningful for quadratic carriers.
  std::int64_t d() const;

  /// Z is a ring only; Q and Q(sqrt(d)) are ordered fields.
  bool is_field() const { return kind_ != Carrier::integers; }

  /// Every nonempty open interval of a dense carrier contains an element.
  bool is_dense() const { return kind_ != Carrier::integers; }

  std::string name() const;  // "Z", "Q", "Qsqrt:<d>"

  friend bool operator==(const Descriptor&, const Descriptor&) = default;

 private:
  Descriptor(Carrier kind, std::int64_t d) : kind_(kind), d_(d) {}

  Carrier kind_;
  std::int64_t d_;
};

/// Parses "Z", "Q", or "Qsqrt:<d>".
Descriptor parse_descriptor(std::string_view text);

/// Coordinates of a + b*sqrt(d) in the basis {1, sqrt(d)}. Since sqrt(d) is
/// irrational for square-free d >= 2, the representation is canonical.
struct QuadParts {
  Rat a;
  Rat b;

  friend bool operator==(const QuadParts&, const QuadParts&) = default;
};

/// An exact element of one carrier. Immutable value type: all operations
/// return fresh elements, all comparisons are decided exactly, and no
/// floating point is involved anywhere.
class Element {
 public:
  static Element zero(const Descriptor& desc);
  static Element one(const Descriptor& desc);

  /// The integer n embedded into the carrier.
  static Element integer(const Descriptor& desc, Int n);

  /// A rational value embedded into the carrier. For the integers carrier
  /// the value must have denominator 1.
  static Element rational(const Descriptor& desc, Rat value);

  /// a + b*sqrt(d); quadratic carriers only.
  static Element quadratic(const Descriptor& desc, Rat a, Rat b);

  const Descriptor& descriptor() const { return desc_; }

  /// Exact sign: -1, 0, or +1. For a + b*sqrt(d) with a, b of opposite
  /// signs this compares a^2 against d*b^2 in exact integer arithmetic.
  int sign() const;

  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }

  /// Coordinates in the basis {1, sqrt(d)}; b is 0 outside quadratic
  /// carriers. Exact for every carrier.
  Rat coeff_a() const;
  Rat coeff_b() const;

  /// Raw payload accessors; throw DomainError when the carrier differs.
  const Int& int_value() const;
  const Rat& rat_value() const;
  const QuadParts& quad_value() const;

  Element operator-() const;
  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);

  /// Field carriers only.
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator/(const Element& x, const Element& y);

  friend std::strong_ordering operator<=>(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y);

 private:
  using Payload = std::variant<Int, Rat, QuadParts>;

  Element(Descriptor desc, Payload payload)
      : desc_(desc), payload_(std::move(payload)) {}

  Descriptor desc_;
  Payload payload_;
};

/// Total order on a shared carrier.
std::strong_ordering compare(const Element& x, const Element& y);

/// max{x, -x}.
Element abs(const Element& x);

/// n copies of x added together (0 for n = 0, negated copies for n < 0).
Element int_scale(const Int& n, const Element& x);

/// Multiplication by a rational scalar. Field carriers; for the integers
/// carrier the scalar must be integral.
Element rat_scale(const Rat& c, const Element& x);

/// Multiplicative inverse; field carriers, x nonzero.
Element inverse(const Element& x);

/// x^n for any integer n; field carriers, x nonzero when n < 0.
Element pow(const Element& x, const Int& n);

/// Some w with a < w < b; dense carriers only. Returns the midpoint.
Element dense_witness(const Element& a, const Element& b);

/// Canonical whitespace-free text: integers as optional-sign decimal,
/// rationals as "p/q" with "/q" omitted when q = 1, quadratic elements as
/// "a+b*sqrt(d)" (or "a-b*sqrt(d)"), collapsing to the rational form when
/// b = 0. Parsing the output yields an equal element.
std::string to_string(const Element& x);

/// Parses the grammar `int | int/int | rat(+|-)rat*sqrt(int)` relative to
/// the given carrier. Whitespace is rejected.
Element parse_element(std::string_view text, const Descriptor& desc);

std::ostream& operator<<(std::ostream& os, const Element& x);

}  // namespace ordex
