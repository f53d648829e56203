#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "ordex/codomain.hpp"
#include "ordex/element.hpp"
#include "ordex/extension.hpp"

namespace ordex {

/// A claimed homomorphism under test: additive on the whole carrier, or
/// logarithmic on the positive cone. The law itself is a precondition that
/// is only checked on samples, so every report restates whether it held.
struct Homomorphism {
  DomainKind kind;
  Descriptor carrier;
  CodomainDescriptor codomain;
  std::function<CodomainElement(const Element&)> eval;
};

/// Result of the constancy-implies-zero check. Phases mirror the proof:
/// (law) the sampled homomorphism precondition, (i) constancy on ]alpha,
/// beta[, (shift) vanishing on the translated window ]0,beta-alpha[ (resp.
/// ]1,b/a[), (ii) vanishing everywhere, reached through division by a step
/// eps' picked inside the translated window, whose decomposition identity
/// a(x) = q*a(eps') + a(r) is checked alongside.
struct ConstancyReport {
  bool law_ok = false;
  std::optional<std::pair<Element, Element>> law_witness;

  bool constant_on_interval = false;
  std::optional<CodomainElement> interval_value;
  std::optional<std::pair<Element, Element>> nonconstant_witness;
  std::optional<bool> claimed_matches;  // set when a value was claimed

  bool shifted_zero = false;
  std::optional<Element> shifted_witness;

  bool zero_everywhere = false;
  std::optional<Element> nonzero_witness;

  bool proof_path_ok = false;
  std::optional<Element> proof_path_witness;

  std::optional<Element> step;  // the eps' actually used
  std::size_t samples = 0;

  bool hypothesis_met() const { return law_ok && constant_on_interval; }
  bool pass() const {
    return hypothesis_met() && shifted_zero && zero_everywhere && proof_path_ok;
  }
};

/// An additive function constant on a sampled nonempty ]alpha,beta[ must be
/// identically zero. Requires alpha < beta. A claimed constant, when given,
/// is compared against the observed one and reported, never enforced.
ConstancyReport constancy_implies_zero_additive(
    const Homomorphism& a, const Element& alpha, const Element& beta,
    std::size_t samples, std::uint64_t seed,
    const std::optional<CodomainElement>& claimed = std::nullopt);

/// Logarithmic analogue on ]a,b[ with 0 < a < b; the translated window is
/// ]1,b/a[ and the decomposition is multiplicative.
ConstancyReport constancy_implies_zero_logarithmic(
    const Homomorphism& l, const Element& a, const Element& b,
    std::size_t samples, std::uint64_t seed,
    const std::optional<CodomainElement>& claimed = std::nullopt);

/// Two additive functions agreeing up to a constant on an interval agree
/// everywhere; the constant, being attained by the additive difference, is
/// forced to zero. Implemented as the constancy check on a1 - a2.
struct AgreementReport {
  ConstancyReport difference;
  bool agree_everywhere = false;
  bool difference_constant_zero = false;
};

AgreementReport agreement_up_to_constant_additive(const Homomorphism& a1,
                                                  const Homomorphism& a2,
                                                  const Element& alpha,
                                                  const Element& beta,
                                                  std::size_t samples,
                                                  std::uint64_t seed);

/// The exact algebraic step of the uniqueness proof, checked in isolation:
/// it must hold for every additive (resp. logarithmic) oracle, whether or
/// not the oracle is constant anywhere.
struct ProofPathReport {
  bool ok = true;
  std::size_t samples = 0;
  std::optional<Element> witness;
};

ProofPathReport proof_path_additive(const Homomorphism& a,
                                    const Element& step, std::size_t samples,
                                    std::uint64_t seed);
ProofPathReport proof_path_logarithmic(const Homomorphism& l,
                                       const Element& step,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace ordex
