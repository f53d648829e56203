#include "ordex/families.hpp"

#include <string>
#include <utility>

#include "ordex/errors.hpp"

namespace ordex {
namespace {

void require_rationals(const Descriptor& desc, const char* what) {
  if (desc.kind() != Carrier::rationals) {
    throw DomainError(std::string(what) + " is only defined over Q");
  }
}

std::vector<Int> checked_primes(std::vector<Int> primes) {
  if (primes.empty()) throw DomainError("valuation vector needs primes");
  for (const Int& p : primes) {
    if (p < 2) throw DomainError("valuation base must be at least 2");
  }
  return primes;
}

CodomainElement valuation_vector_at(const std::vector<Int>& primes,
                                    const Element& x) {
  if (!x.is_positive()) {
    throw DomainError("valuations are defined on positive rationals only");
  }
  std::vector<Int> comps;
  comps.reserve(primes.size());
  for (const Int& p : primes) {
    comps.push_back(prime_valuation(p, x.rat_value()));
  }
  return CodomainElement::vector(std::move(comps));
}

}  // namespace

PartialFunction linear_family(const Rat& lambda, const Element& epsilon) {
  auto codomain = CodomainDescriptor::group(epsilon.descriptor());
  return PartialFunction::additive(
      epsilon, codomain, [lambda](const Element& x) {
        return CodomainElement::of(rat_scale(lambda, x));
      });
}

PartialFunction dyadic_log_family(const Element& epsilon) {
  require_rationals(epsilon.descriptor(), "the dyadic valuation");
  auto codomain = CodomainDescriptor::group(Descriptor::integers());
  return PartialFunction::logarithmic(
      epsilon, codomain, [](const Element& x) {
        return CodomainElement::of(Element::integer(
            Descriptor::integers(), dyadic_valuation(x.rat_value())));
      });
}

PartialFunction valuation_vector_family(std::vector<Int> primes,
                                        const Element& epsilon) {
  require_rationals(epsilon.descriptor(), "the valuation vector");
  auto checked = checked_primes(std::move(primes));
  auto codomain = CodomainDescriptor::int_vector(checked.size());
  return PartialFunction::logarithmic(
      epsilon, codomain, [checked](const Element& x) {
        return valuation_vector_at(checked, x);
      });
}

Homomorphism linear_total(const Descriptor& carrier, const Rat& lambda) {
  return Homomorphism{DomainKind::additive, carrier,
                      CodomainDescriptor::group(carrier),
                      [lambda](const Element& x) {
                        return CodomainElement::of(rat_scale(lambda, x));
                      }};
}

Homomorphism dyadic_log_total() {
  return Homomorphism{DomainKind::logarithmic, Descriptor::rationals(),
                      CodomainDescriptor::group(Descriptor::integers()),
                      [](const Element& x) {
                        if (!x.is_positive()) {
                          throw DomainError(
                              "the dyadic valuation needs a positive argument");
                        }
                        return CodomainElement::of(Element::integer(
                            Descriptor::integers(),
                            dyadic_valuation(x.rat_value())));
                      }};
}

Homomorphism valuation_vector_total(std::vector<Int> primes) {
  auto checked = checked_primes(std::move(primes));
  auto codomain = CodomainDescriptor::int_vector(checked.size());
  return Homomorphism{DomainKind::logarithmic, Descriptor::rationals(),
                      codomain, [checked](const Element& x) {
                        return valuation_vector_at(checked, x);
                      }};
}

QuasiExample aczel_example() {
  const Descriptor q = Descriptor::rationals();
  const auto z = CodomainDescriptor::group(Descriptor::integers());
  const Element zero = Element::zero(q);
  const Element one = Element::one(q);
  const Element two = Element::integer(q, 2);
  const Element three = Element::integer(q, 3);

  QuasiExample ex{
      PlaneDomain::rectangle(Interval::open(zero, one),
                             Interval::open(one, two)),
      [=](const Element& x) {
        if (Interval::open(zero, one).contains(x)) {
          return CodomainElement::zero(z);
        }
        if (Interval::open(one, three).contains(x)) {
          return CodomainElement::of(
              Element::integer(Descriptor::integers(), 1));
        }
        throw DomainError("example oracle queried outside ]0,1[ u ]1,3[");
      },
      QuasiExtensionCertificate{
          [z](const Element&) { return CodomainElement::zero(z); },
          CodomainElement::zero(z),
          CodomainElement::of(Element::integer(Descriptor::integers(), 1))}};
  return ex;
}

}  // namespace ordex
