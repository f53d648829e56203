#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ordex/codomain.hpp"
#include "ordex/element.hpp"
#include "ordex/interval.hpp"

namespace ordex {

enum class DomainKind : std::uint8_t { additive, logarithmic };

/// A function given only on a restricted domain together with the law it is
/// supposed to satisfy there:
///   additive:     f on ]-2e,2e[ with f(x+y) = f(x)+f(y) for x,y in ]-e,e[
///   logarithmic:  f on ]e^-2,e^2[ with f(xy) = f(x)+f(y) for x,y in ]e^-1,e[
/// The oracle is only ever queried strictly inside the stated domain; an
/// out-of-domain query throws.
class PartialFunction {
 public:
  using Oracle = std::function<CodomainElement(const Element&)>;

  /// epsilon > 0.
  static PartialFunction additive(Element epsilon, CodomainDescriptor codomain,
                                  Oracle oracle);

  /// Field carrier, epsilon > 1 (otherwise ]e^-1,e[ is empty).
  static PartialFunction logarithmic(Element epsilon,
                                     CodomainDescriptor codomain,
                                     Oracle oracle);

  DomainKind kind() const { return kind_; }
  const Element& epsilon() const { return epsilon_; }
  const Descriptor& carrier() const { return epsilon_.descriptor(); }
  const CodomainDescriptor& codomain() const { return codomain_; }

  /// ]-2e,2e[ or ]e^-2,e^2[.
  const Interval& domain() const { return domain_; }

  /// ]-e,e[ or ]e^-1,e[: where the restricted law is required to hold.
  const Interval& law_window() const { return window_; }

  CodomainElement operator()(const Element& x) const;

 private:
  PartialFunction(DomainKind kind, Element epsilon, CodomainDescriptor codomain,
                  Oracle oracle, Interval domain, Interval window);

  DomainKind kind_;
  Element epsilon_;
  CodomainDescriptor codomain_;
  Oracle oracle_;
  Interval domain_;
  Interval window_;
};

struct LawViolation {
  Element x;
  Element y;
  CodomainElement combined;  // f(x+y), resp. f(xy)
  CodomainElement parts;     // f(x)+f(y)
};

struct LawReport {
  std::size_t samples = 0;
  std::vector<LawViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Samples pairs from the law window and checks the restricted equation
/// exactly. Violations are data, not errors; an empty list is a pass.
LawReport verify_restricted_additive(const PartialFunction& f,
                                     std::size_t samples, std::uint64_t seed);
LawReport verify_restricted_logarithmic(const PartialFunction& f,
                                        std::size_t samples,
                                        std::uint64_t seed);

/// The restricted law cannot be checked exhaustively. The caller either
/// asserts it outright or presents a sampled verification, which the
/// extension constructors run before building anything.
struct HypothesisPolicy {
  static HypothesisPolicy trusted() { return {false, 0, 0}; }
  static HypothesisPolicy sampled(std::size_t samples, std::uint64_t seed) {
    return {true, samples, seed};
  }

  bool verify;
  std::size_t samples;
  std::uint64_t seed;
};

/// Total extension a (resp. l) of a partial f, evaluated pointwise through
/// Euclidean division by the base point:
///   (n, r) := euclidean_div(x, y0);       a(x) := n*f(y0) + f(r)
///   (n, r) := multiplicative_div(x, y0);  l(x) := n*f(y0) + f(r)
/// Total on the carrier (additive) or on the positive cone (logarithmic).
class ExtendedFunction {
 public:
  DomainKind kind() const { return f_.kind(); }
  const Element& base_point() const { return y0_; }
  const PartialFunction& base_function() const { return f_; }

  CodomainElement operator()(const Element& x) const;

 private:
  friend ExtendedFunction extend_additive(PartialFunction, const Element&,
                                          const HypothesisPolicy&);
  friend ExtendedFunction extend_logarithmic(PartialFunction, const Element&,
                                             const HypothesisPolicy&);

  ExtendedFunction(PartialFunction f, Element y0, CodomainElement f_y0)
      : f_(std::move(f)), y0_(std::move(y0)), f_y0_(std::move(f_y0)) {}

  PartialFunction f_;
  Element y0_;
  CodomainElement f_y0_;  // memo; r-values stay fresh oracle calls
};

/// Requires a dense carrier and 0 < y0 < epsilon; refuses otherwise rather
/// than produce a function the theorem does not cover.
ExtendedFunction extend_additive(PartialFunction f, const Element& y0,
                                 const HypothesisPolicy& policy);

/// Requires 1 < y0 < epsilon.
ExtendedFunction extend_logarithmic(PartialFunction f, const Element& y0,
                                    const HypothesisPolicy& policy);

}  // namespace ordex
