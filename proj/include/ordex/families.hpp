#pragma once

#include <functional>
#include <vector>

#include "ordex/codomain.hpp"
#include "ordex/element.hpp"
#include "ordex/extension.hpp"
#include "ordex/numeric.hpp"
#include "ordex/quasi_extension.hpp"
#include "ordex/uniqueness.hpp"

namespace ordex {

// Arbitrary oracles are not serializable, so these concrete families are
// the test harness's (and the CLI's) only way to produce functions subject
// to the restricted equations. Hamel-basis pathologies have no exact finite
// description and are not representable here.

/// f(x) = lambda*x restricted to ]-2e,2e[; codomain is the carrier itself.
PartialFunction linear_family(const Rat& lambda, const Element& epsilon);

/// The dyadic valuation v2 on positive rationals (v2(2^k*p/q) = k for odd
/// p, q), restricted to ]e^-2,e^2[. Codomain Z. Carrier must be Q.
PartialFunction dyadic_log_family(const Element& epsilon);

/// x maps to (v_p1(x), ..., v_pk(x)) restricted to ]e^-2,e^2[; codomain is
/// the integer-vector group of length k. Carrier must be Q.
PartialFunction valuation_vector_family(std::vector<Int> primes,
                                        const Element& epsilon);

/// Total counterparts used by the uniqueness checks.
Homomorphism linear_total(const Descriptor& carrier, const Rat& lambda);
Homomorphism dyadic_log_total();
Homomorphism valuation_vector_total(std::vector<Int> primes);

/// The worked quasi-extension example: f = 0 on ]0,1[ and f = 1 on ]1,3[
/// over the rectangle ]0,1[ x ]1,2[ in Q, with certificate (a == 0, c1 = 0,
/// c2 = 1). f has no true additive extension, yet the certificate passes.
struct QuasiExample {
  PlaneDomain domain;
  std::function<CodomainElement(const Element&)> f;
  QuasiExtensionCertificate certificate;
};

QuasiExample aczel_example();

}  // namespace ordex
