#include "ordex/uniqueness.hpp"

#include "ordex/division.hpp"
#include "ordex/errors.hpp"
#include "ordex/interval.hpp"
#include "ordex/rng.hpp"

namespace ordex {
namespace {

// Wide enough that phase (ii) hits points far outside any desk-scale
// interval.
constexpr std::uint64_t kWideMagnitude = 1000000;

Element random_positive(Rng& rng, const Descriptor& desc,
                        std::uint64_t mag = kWideMagnitude) {
  for (;;) {
    Element e = rng.random_element(desc, mag);
    if (e.is_positive()) return e;
    if (!e.is_zero()) return -e;
  }
}

// eps' in ]0, width[; the integers carrier cannot use dense_witness, so it
// falls back to 1 when the window admits it.
Element pick_step_additive(const Element& width) {
  const Descriptor& desc = width.descriptor();
  const Element zero = Element::zero(desc);
  if (desc.is_dense()) return dense_witness(zero, width);
  const Element one = Element::one(desc);
  if (compare(one, width) == std::strong_ordering::less) return one;
  throw DomainError("interval too narrow to pick a step inside ]0,beta-alpha[");
}

void check_law(const Homomorphism& h, std::size_t samples, Rng& rng,
               ConstancyReport& report, bool multiplicative) {
  const Descriptor& desc = h.carrier;
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = multiplicative ? random_positive(rng, desc, 1000)
                               : rng.random_element(desc);
    Element y = multiplicative ? random_positive(rng, desc, 1000)
                               : rng.random_element(desc);
    Element combined = multiplicative ? x * y : x + y;
    if (!(h.eval(combined) == h.eval(x) + h.eval(y))) {
      report.law_witness = {std::move(x), std::move(y)};
      return;
    }
  }
  report.law_ok = true;
}

void check_constancy(const Homomorphism& h, const Interval& window,
                     std::size_t samples, Rng& rng, ConstancyReport& report,
                     const std::optional<CodomainElement>& claimed) {
  std::optional<Element> first_point;
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = rng.element_in(window);
    CodomainElement value = h.eval(x);
    if (!report.interval_value) {
      report.interval_value = std::move(value);
      first_point = std::move(x);
      continue;
    }
    if (!(value == *report.interval_value)) {
      report.nonconstant_witness = {*first_point, std::move(x)};
      return;
    }
  }
  report.constant_on_interval = true;
  if (claimed && report.interval_value) {
    report.claimed_matches = (*report.interval_value == *claimed);
  }
}

}  // namespace

ConstancyReport constancy_implies_zero_additive(
    const Homomorphism& a, const Element& alpha, const Element& beta,
    std::size_t samples, std::uint64_t seed,
    const std::optional<CodomainElement>& claimed) {
  if (a.kind != DomainKind::additive) {
    throw DomainError("additive constancy check on a non-additive oracle");
  }
  if (alpha.descriptor() != a.carrier || beta.descriptor() != a.carrier) {
    throw DescriptorMismatch("interval endpoints outside the carrier");
  }
  if (compare(alpha, beta) != std::strong_ordering::less) {
    throw DomainError("empty interval: alpha must be less than beta");
  }

  Rng rng(seed);
  ConstancyReport report;
  report.samples = samples;
  const CodomainElement zero = CodomainElement::zero(a.codomain);
  const Element width = beta - alpha;
  report.step = pick_step_additive(width);

  check_law(a, samples, rng, report, false);
  if (!report.law_ok) return report;

  check_constancy(a, Interval::open(alpha, beta), samples, rng, report,
                  claimed);
  if (!report.constant_on_interval) return report;

  // a vanishes on ]0,beta-alpha[: every point there is a difference of two
  // interval points.
  report.shifted_zero = true;
  const Interval shifted =
      Interval::open(Element::zero(alpha.descriptor()), width);
  for (std::size_t i = 0; i < samples; ++i) {
    Element y = rng.element_in(shifted);
    if (!(a.eval(y) == zero)) {
      report.shifted_zero = false;
      report.shifted_witness = std::move(y);
      break;
    }
  }

  report.zero_everywhere = true;
  report.proof_path_ok = true;
  const CodomainElement step_value = a.eval(*report.step);
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = rng.random_element(a.carrier, kWideMagnitude);
    DivisionResult d = euclidean_div(x, *report.step);
    CodomainElement via_step =
        int_scale(d.quotient, step_value) + a.eval(d.remainder);
    CodomainElement direct = a.eval(x);
    if (report.proof_path_ok && !(direct == via_step)) {
      report.proof_path_ok = false;
      report.proof_path_witness = x;
    }
    if (report.zero_everywhere && !(direct == zero)) {
      report.zero_everywhere = false;
      report.nonzero_witness = std::move(x);
    }
    if (!report.proof_path_ok && !report.zero_everywhere) break;
  }
  return report;
}

ConstancyReport constancy_implies_zero_logarithmic(
    const Homomorphism& l, const Element& a, const Element& b,
    std::size_t samples, std::uint64_t seed,
    const std::optional<CodomainElement>& claimed) {
  if (l.kind != DomainKind::logarithmic) {
    throw DomainError("logarithmic constancy check on a non-logarithmic oracle");
  }
  if (a.descriptor() != l.carrier || b.descriptor() != l.carrier) {
    throw DescriptorMismatch("interval endpoints outside the carrier");
  }
  if (!l.carrier.is_field()) {
    throw DomainError("logarithmic check requires a field carrier");
  }
  if (!a.is_positive() || compare(a, b) != std::strong_ordering::less) {
    throw DomainError("need 0 < a < b");
  }

  Rng rng(seed);
  ConstancyReport report;
  report.samples = samples;
  const CodomainElement zero = CodomainElement::zero(l.codomain);
  const Element one = Element::one(l.carrier);
  const Element ratio = b / a;
  report.step = dense_witness(one, ratio);

  check_law(l, samples, rng, report, true);
  if (!report.law_ok) return report;

  check_constancy(l, Interval::open(a, b), samples, rng, report, claimed);
  if (!report.constant_on_interval) return report;

  // l vanishes on ]1, b/a[: quotients of interval points.
  report.shifted_zero = true;
  const Interval shifted = Interval::open(one, ratio);
  for (std::size_t i = 0; i < samples; ++i) {
    Element y = rng.element_in(shifted);
    if (!(l.eval(y) == zero)) {
      report.shifted_zero = false;
      report.shifted_witness = std::move(y);
      break;
    }
  }

  report.zero_everywhere = true;
  report.proof_path_ok = true;
  const CodomainElement step_value = l.eval(*report.step);
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = random_positive(rng, l.carrier);
    DivisionResult d = multiplicative_div(x, *report.step);
    CodomainElement via_step =
        int_scale(d.quotient, step_value) + l.eval(d.remainder);
    CodomainElement direct = l.eval(x);
    if (report.proof_path_ok && !(direct == via_step)) {
      report.proof_path_ok = false;
      report.proof_path_witness = x;
    }
    if (report.zero_everywhere && !(direct == zero)) {
      report.zero_everywhere = false;
      report.nonzero_witness = std::move(x);
    }
    if (!report.proof_path_ok && !report.zero_everywhere) break;
  }
  return report;
}

AgreementReport agreement_up_to_constant_additive(
    const Homomorphism& a1, const Homomorphism& a2, const Element& alpha,
    const Element& beta, std::size_t samples, std::uint64_t seed) {
  if (a1.kind != DomainKind::additive || a2.kind != DomainKind::additive) {
    throw DomainError("agreement check requires additive oracles");
  }
  if (a1.carrier != a2.carrier) {
    throw DescriptorMismatch("oracles over different carriers");
  }
  if (!(a1.codomain == a2.codomain)) {
    throw DescriptorMismatch("oracles into different codomains");
  }
  Homomorphism difference{
      DomainKind::additive, a1.carrier, a1.codomain,
      [e1 = a1.eval, e2 = a2.eval](const Element& x) { return e1(x) - e2(x); }};
  AgreementReport report;
  report.difference = constancy_implies_zero_additive(difference, alpha, beta,
                                                      samples, seed);
  report.agree_everywhere =
      report.difference.hypothesis_met() && report.difference.zero_everywhere;
  const CodomainElement zero = CodomainElement::zero(a1.codomain);
  report.difference_constant_zero =
      report.difference.interval_value.has_value() &&
      *report.difference.interval_value == zero;
  return report;
}

ProofPathReport proof_path_additive(const Homomorphism& a, const Element& step,
                                    std::size_t samples, std::uint64_t seed) {
  if (!step.is_positive()) throw DomainError("step must be positive");
  Rng rng(seed);
  ProofPathReport report;
  report.samples = samples;
  const CodomainElement step_value = a.eval(step);
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = rng.random_element(a.carrier, kWideMagnitude);
    DivisionResult d = euclidean_div(x, step);
    if (!(a.eval(x) == int_scale(d.quotient, step_value) + a.eval(d.remainder))) {
      report.ok = false;
      report.witness = std::move(x);
      return report;
    }
  }
  return report;
}

ProofPathReport proof_path_logarithmic(const Homomorphism& l,
                                       const Element& step,
                                       std::size_t samples,
                                       std::uint64_t seed) {
  const Element one = Element::one(l.carrier);
  if (compare(one, step) != std::strong_ordering::less) {
    throw DomainError("step must exceed 1");
  }
  Rng rng(seed);
  ProofPathReport report;
  report.samples = samples;
  const CodomainElement step_value = l.eval(step);
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = random_positive(rng, l.carrier);
    DivisionResult d = multiplicative_div(x, step);
    if (!(l.eval(x) == int_scale(d.quotient, step_value) + l.eval(d.remainder))) {
      report.ok = false;
      report.witness = std::move(x);
      return report;
    }
  }
  return report;
}

}  // namespace ordex
