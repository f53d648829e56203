#include "ordex/extension.hpp"

#include <string>

#include "ordex/division.hpp"
#include "ordex/errors.hpp"
#include "ordex/rng.hpp"

namespace ordex {

PartialFunction::PartialFunction(DomainKind kind, Element epsilon,
                                 CodomainDescriptor codomain, Oracle oracle,
                                 Interval domain, Interval window)
    : kind_(kind),
      epsilon_(std::move(epsilon)),
      codomain_(std::move(codomain)),
      oracle_(std::move(oracle)),
      domain_(std::move(domain)),
      window_(std::move(window)) {}

PartialFunction PartialFunction::additive(Element epsilon,
                                          CodomainDescriptor codomain,
                                          Oracle oracle) {
  if (!epsilon.is_positive()) {
    throw DomainError("additive domain requires epsilon > 0");
  }
  Interval domain = Interval::open(int_scale(-2, epsilon), int_scale(2, epsilon));
  Interval window = Interval::open(-epsilon, epsilon);
  return PartialFunction(DomainKind::additive, std::move(epsilon),
                         std::move(codomain), std::move(oracle),
                         std::move(domain), std::move(window));
}

PartialFunction PartialFunction::logarithmic(Element epsilon,
                                             CodomainDescriptor codomain,
                                             Oracle oracle) {
  if (!epsilon.descriptor().is_field()) {
    throw DomainError("logarithmic domain requires a field carrier");
  }
  if (compare(epsilon, Element::one(epsilon.descriptor())) !=
      std::strong_ordering::greater) {
    throw DomainError("logarithmic domain requires epsilon > 1");
  }
  Interval domain = Interval::open(pow(epsilon, -2), pow(epsilon, 2));
  Interval window = Interval::open(inverse(epsilon), epsilon);
  return PartialFunction(DomainKind::logarithmic, std::move(epsilon),
                         std::move(codomain), std::move(oracle),
                         std::move(domain), std::move(window));
}

CodomainElement PartialFunction::operator()(const Element& x) const {
  if (!domain_.contains(x)) {
    throw DomainError("partial function queried outside its domain at " +
                      to_string(x));
  }
  return oracle_(x);
}

namespace {

LawReport verify_law(const PartialFunction& f, std::size_t samples,
                     std::uint64_t seed, bool multiplicative) {
  Rng rng(seed);
  LawReport report;
  report.samples = samples;
  const Interval& window = f.law_window();
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = rng.element_in(window);
    Element y = rng.element_in(window);
    CodomainElement combined = multiplicative ? f(x * y) : f(x + y);
    CodomainElement parts = f(x) + f(y);
    if (!(combined == parts)) {
      report.violations.push_back(
          {std::move(x), std::move(y), std::move(combined), std::move(parts)});
    }
  }
  return report;
}

void require_law(const PartialFunction& f, const HypothesisPolicy& policy,
                 bool multiplicative) {
  if (!policy.verify) return;
  LawReport report = verify_law(f, policy.samples, policy.seed, multiplicative);
  if (!report.pass()) {
    const LawViolation& v = report.violations.front();
    throw DomainError("restricted equation fails at (" + to_string(v.x) + ", " +
                      to_string(v.y) + ")");
  }
}

}  // namespace

LawReport verify_restricted_additive(const PartialFunction& f,
                                     std::size_t samples, std::uint64_t seed) {
  if (f.kind() != DomainKind::additive) {
    throw DomainError("additive law check applied to a logarithmic function");
  }
  return verify_law(f, samples, seed, false);
}

LawReport verify_restricted_logarithmic(const PartialFunction& f,
                                        std::size_t samples,
                                        std::uint64_t seed) {
  if (f.kind() != DomainKind::logarithmic) {
    throw DomainError("logarithmic law check applied to an additive function");
  }
  return verify_law(f, samples, seed, true);
}

CodomainElement ExtendedFunction::operator()(const Element& x) const {
  if (f_.kind() == DomainKind::additive) {
    DivisionResult d = euclidean_div(x, y0_);
    return int_scale(d.quotient, f_y0_) + f_(d.remainder);
  }
  if (!x.is_positive()) {
    throw DomainError("logarithmic extension is defined on the positive cone");
  }
  DivisionResult d = multiplicative_div(x, y0_);
  return int_scale(d.quotient, f_y0_) + f_(d.remainder);
}

ExtendedFunction extend_additive(PartialFunction f, const Element& y0,
                                 const HypothesisPolicy& policy) {
  if (f.kind() != DomainKind::additive) {
    throw DomainError("extend_additive requires an additive partial function");
  }
  if (!f.carrier().is_dense()) {
    throw DomainError("carrier is not dense; extension theorem does not apply");
  }
  if (y0.descriptor() != f.carrier()) {
    throw DescriptorMismatch("base point lives in a different carrier");
  }
  if (!y0.is_positive() ||
      compare(y0, f.epsilon()) != std::strong_ordering::less) {
    throw DomainError("base point must lie in ]0,epsilon[");
  }
  require_law(f, policy, false);
  CodomainElement f_y0 = f(y0);
  return ExtendedFunction(std::move(f), y0, std::move(f_y0));
}

ExtendedFunction extend_logarithmic(PartialFunction f, const Element& y0,
                                    const HypothesisPolicy& policy) {
  if (f.kind() != DomainKind::logarithmic) {
    throw DomainError(
        "extend_logarithmic requires a logarithmic partial function");
  }
  if (y0.descriptor() != f.carrier()) {
    throw DescriptorMismatch("base point lives in a different carrier");
  }
  const Element one = Element::one(y0.descriptor());
  if (compare(one, y0) != std::strong_ordering::less ||
      compare(y0, f.epsilon()) != std::strong_ordering::less) {
    throw DomainError("base point must lie in ]1,epsilon[");
  }
  require_law(f, policy, true);
  CodomainElement f_y0 = f(y0);
  return ExtendedFunction(std::move(f), y0, std::move(f_y0));
}

}  // namespace ordex
