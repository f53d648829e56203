#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordex/codomain.hpp"
#include "ordex/element.hpp"
#include "ordex/interval.hpp"
#include "ordex/rng.hpp"

namespace ordex {

/// A subset D of the plane: either a rectangle I x J of intervals or a
/// finite explicit set of pairs. Nonempty by construction.
class PlaneDomain {
 public:
  static PlaneDomain rectangle(Interval x_side, Interval y_side);
  static PlaneDomain finite(std::vector<std::pair<Element, Element>> points);

  bool is_rectangle() const { return !rect_.empty(); }
  const Interval& x_side() const;
  const Interval& y_side() const;
  const std::vector<std::pair<Element, Element>>& points() const;
  const Descriptor& descriptor() const;

 private:
  PlaneDomain() = default;

  std::vector<Interval> rect_;  // empty, or exactly {I, J}
  std::vector<std::pair<Element, Element>> points_;
};

/// One projection of a plane domain: an interval or a finite sorted set.
class ProjectionSet {
 public:
  static ProjectionSet of(Interval window);
  static ProjectionSet of_points(std::vector<Element> elements);

  bool is_interval() const { return !window_.empty(); }
  const Interval& window() const;
  const std::vector<Element>& points() const;

  bool contains(const Element& x) const;

  /// Interval projections draw `samples` random members; finite projections
  /// return every point (exhaustive beats sampled for finite sets).
  std::vector<Element> sample(Rng& rng, std::size_t samples) const;

  friend bool operator==(const ProjectionSet& a, const ProjectionSet& b);

 private:
  ProjectionSet() = default;

  std::vector<Interval> window_;  // empty, or exactly {I}
  std::vector<Element> points_;   // sorted, deduplicated
};

std::string to_string(const ProjectionSet& s);

struct DomainProjections {
  ProjectionSet x;    // D_x
  ProjectionSet y;    // D_y
  ProjectionSet sum;  // D_{x+y}
};

/// D_x = {u | (u,v) in D}, D_y likewise, D_{x+y} = {u+v | (u,v) in D}.
/// For a rectangle the sum projection is interval_sum of the sides.
DomainProjections project_domain(const PlaneDomain& domain);

/// Claim that f is a + c1 on D_x, a + c2 on D_y, a + c1 + c2 on D_{x+y},
/// for an additive witness a.
struct QuasiExtensionCertificate {
  std::function<CodomainElement(const Element&)> witness;
  CodomainElement c1;
  CodomainElement c2;
};

struct QuasiViolation {
  std::string projection;  // "D_x", "D_y", "D_x+y"
  Element point;
  CodomainElement f_value;
  CodomainElement expected;
};

struct QuasiReport {
  bool additive_ok = true;
  std::optional<std::pair<Element, Element>> additive_witness_failure;
  std::size_t samples = 0;
  std::vector<QuasiViolation> violations;

  bool pass() const { return additive_ok && violations.empty(); }
};

/// Samples each projection and checks the three identities exactly. The
/// witness's additivity (the certificate's precondition) is itself checked
/// on sampled pairs first.
QuasiReport check_quasi_extension(
    const std::function<CodomainElement(const Element&)>& f,
    const PlaneDomain& domain, const QuasiExtensionCertificate& cert,
    std::size_t samples, std::uint64_t seed);

}  // namespace ordex
