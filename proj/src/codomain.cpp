#include "ordex/codomain.hpp"

#include <sstream>
#include <utility>

namespace ordex {

namespace {

void require_same(const CodomainElement& x, const CodomainElement& y) {
  if (!(x.descriptor() == y.descriptor())) {
    throw DescriptorMismatch("codomain mismatch: " + x.descriptor().name() + " vs " + y.descriptor().name());
  }
}

}  // namespace

CodomainDescriptor CodomainDescriptor::group(Descriptor desc) {
  return CodomainDescriptor(std::variant<Descriptor, std::size_t>(std::move(desc)));
}

CodomainDescriptor CodomainDescriptor::int_vector(std::size_t length) {
  if (length == 0) throw DomainError("vector codomain needs positive length");
  return CodomainDescriptor(std::variant<Descriptor, std::size_t>(length));
}

const Descriptor& CodomainDescriptor::group_descriptor() const {
  if (is_vector()) throw DomainError("vector codomain has no group descriptor");
  return std::get<Descriptor>(rep_);
}

std::size_t CodomainDescriptor::length() const {
  if (!is_vector()) throw DomainError("group codomain has no vector length");
  return std::get<std::size_t>(rep_);
}

std::string CodomainDescriptor::name() const {
  if (is_vector()) return "vec:" + std::to_string(length());
  return group_descriptor().name();
}

CodomainDescriptor parse_codomain_descriptor(std::string_view text) {
  constexpr std::string_view prefix = "vec:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad codomain: " + std::string(text));
    }
    return CodomainDescriptor::int_vector(std::stoul(digits));
  }
  return CodomainDescriptor::group(parse_descriptor(text));
}

CodomainElement CodomainElement::zero(const CodomainDescriptor& desc) {
  if (desc.is_vector()) return vector(std::vector<Int>(desc.length(), Int(0)));
  return of(Element::zero(desc.group_descriptor()));
}

CodomainElement CodomainElement::of(Element value) { return CodomainElement(Payload(std::move(value))); }

CodomainElement CodomainElement::vector(std::vector<Int> components) {
  if (components.empty()) throw DomainError("vector codomain needs positive length");
  return CodomainElement(Payload(std::move(components)));
}

CodomainDescriptor CodomainElement::descriptor() const {
  if (const auto* vec = std::get_if<std::vector<Int>>(&payload_)) {
    return CodomainDescriptor::int_vector(vec->size());
  }
  return CodomainDescriptor::group(std::get<Element>(payload_).descriptor());
}

bool CodomainElement::is_zero() const {
  if (const auto* vec = std::get_if<std::vector<Int>>(&payload_)) {
    for (const Int& c : *vec) {
      if (c != 0) return false;
    }
    return true;
  }
  return std::get<Element>(payload_).is_zero();
}

const Element& CodomainElement::group_value() const {
  if (!std::holds_alternative<Element>(payload_)) throw DomainError("not a group codomain value");
  return std::get<Element>(payload_);
}

const std::vector<Int>& CodomainElement::vector_value() const {
  if (!std::holds_alternative<std::vector<Int>>(payload_)) throw DomainError("not a vector codomain value");
  return std::get<std::vector<Int>>(payload_);
}

CodomainElement CodomainElement::operator-() const {
  if (const auto* vec = std::get_if<std::vector<Int>>(&payload_)) {
    std::vector<Int> out;
    out.reserve(vec->size());
    for (const Int& c : *vec) out.push_back(-c);
    return vector(std::move(out));
  }
  return of(-std::get<Element>(payload_));
}

CodomainElement operator+(const CodomainElement& x, const CodomainElement& y) {
  require_same(x, y);
  if (const auto* xs = std::get_if<std::vector<Int>>(&x.payload_)) {
    const auto& ys = std::get<std::vector<Int>>(y.payload_);
    std::vector<Int> out;
    out.reserve(xs->size());
    for (std::size_t i = 0; i < xs->size(); ++i) out.push_back((*xs)[i] + ys[i]);
    return CodomainElement::vector(std::move(out));
  }
  return CodomainElement::of(std::get<Element>(x.payload_) + std::get<Element>(y.payload_));
}

CodomainElement operator-(const CodomainElement& x, const CodomainElement& y) { return x + (-y); }

bool operator==(const CodomainElement& x, const CodomainElement& y) {
  require_same(x, y);
  if (const auto* xs = std::get_if<std::vector<Int>>(&x.payload_)) {
    return *xs == std::get<std::vector<Int>>(y.payload_);
  }
  return std::get<Element>(x.payload_) == std::get<Element>(y.payload_);
}

CodomainElement int_scale(const Int& n, const CodomainElement& x) {
  if (x.descriptor().is_vector()) {
    std::vector<Int> out;
    out.reserve(x.vector_value().size());
    for (const Int& c : x.vector_value()) out.push_back(n * c);
    return CodomainElement::vector(std::move(out));
  }
  return CodomainElement::of(int_scale(n, x.group_value()));
}

std::string to_string(const CodomainElement& x) {
  if (!x.descriptor().is_vector()) return to_string(x.group_value());
  std::ostringstream os;
  os << "[";
  const auto& comps = x.vector_value();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0) os << ",";
    os << comps[i];
  }
  os << "]";
  return os.str();
}

CodomainElement parse_codomain_element(std::string_view text, const CodomainDescriptor& desc) {
  if (!desc.is_vector()) {
    return CodomainElement::of(parse_element(text, desc.group_descriptor()));
  }
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("cannot parse codomain value: " + std::string(text));
  }
  std::string_view inner = text.substr(1, text.size() - 2);
  std::vector<Int> comps;
  while (!inner.empty()) {
    const std::size_t comma = inner.find(',');
    const std::string_view tok = inner.substr(0, comma);
    const Descriptor z = Descriptor::integers();
    comps.push_back(parse_element(tok, z).int_value());
    if (comma == std::string_view::npos) break;
    inner = inner.substr(comma + 1);
  }
  if (comps.size() != desc.length()) {
    throw ParseError("codomain value has wrong length: " + std::string(text));
  }
  return CodomainElement::vector(std::move(comps));
}

}  // namespace ordex
