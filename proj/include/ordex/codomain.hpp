#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordex/element.hpp"

namespace ordex {

/// Identifies an abelian value group: Z, Q, Q(sqrt(d)), or fixed-length
/// integer vectors under componentwise addition.
class CodomainDescriptor {
 public:
  static CodomainDescriptor group(Descriptor desc);
  static CodomainDescriptor int_vector(std::size_t length);

  bool is_vector() const { return std::holds_alternative<std::size_t>(rep_); }
  const Descriptor& group_descriptor() const;
  std::size_t length() const;

  std::string name() const;  // "Z", "Q", "Qsqrt:<d>", "vec:<n>"

  friend bool operator==(const CodomainDescriptor&, const CodomainDescriptor&) = default;

 private:
  explicit CodomainDescriptor(std::variant<Descriptor, std::size_t> rep) : rep_(std::move(rep)) {}

  std::variant<Descriptor, std::size_t> rep_;
};

CodomainDescriptor parse_codomain_descriptor(std::string_view text);

/// A value in an abelian group: supports exact addition, negation, zero,
/// integer scaling, and decidable equality. Used as the codomain of the
/// partial and extended functions.
class CodomainElement {
 public:
  static CodomainElement zero(const CodomainDescriptor& desc);
  static CodomainElement of(Element value);
  static CodomainElement vector(std::vector<Int> components);

  CodomainDescriptor descriptor() const;

  bool is_zero() const;
  const Element& group_value() const;
  const std::vector<Int>& vector_value() const;

  CodomainElement operator-() const;
  friend CodomainElement operator+(const CodomainElement& x, const CodomainElement& y);
  friend CodomainElement operator-(const CodomainElement& x, const CodomainElement& y);
  friend bool operator==(const CodomainElement& x, const CodomainElement& y);

 private:
  using Payload = std::variant<Element, std::vector<Int>>;

  explicit CodomainElement(Payload payload) : payload_(std::move(payload)) {}

  Payload payload_;
};

CodomainElement int_scale(const Int& n, const CodomainElement& x);

/// Vectors render as "[c1,c2,...]"; group values use the element format.
std::string to_string(const CodomainElement& x);

CodomainElement parse_codomain_element(std::string_view text, const CodomainDescriptor& desc);

}  // namespace ordex
