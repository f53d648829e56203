#include "ordex/quasi_extension.hpp"

#include <algorithm>

#include "ordex/errors.hpp"

namespace ordex {

PlaneDomain PlaneDomain::rectangle(Interval x_side, Interval y_side) {
  if (x_side.descriptor() != y_side.descriptor()) {
    throw DescriptorMismatch("rectangle sides over different carriers");
  }
  PlaneDomain d;
  d.rect_.push_back(std::move(x_side));
  d.rect_.push_back(std::move(y_side));
  return d;
}

PlaneDomain PlaneDomain::finite(
    std::vector<std::pair<Element, Element>> points) {
  if (points.empty()) throw DomainError("empty plane domain");
  const Descriptor desc = points.front().first.descriptor();
  for (const auto& [u, v] : points) {
    if (u.descriptor() != desc || v.descriptor() != desc) {
      throw DescriptorMismatch("plane domain mixes carriers");
    }
  }
  PlaneDomain d;
  d.points_ = std::move(points);
  return d;
}

const Interval& PlaneDomain::x_side() const {
  if (!is_rectangle()) throw DomainError("finite domain has no rectangle side");
  return rect_[0];
}

const Interval& PlaneDomain::y_side() const {
  if (!is_rectangle()) throw DomainError("finite domain has no rectangle side");
  return rect_[1];
}

const std::vector<std::pair<Element, Element>>& PlaneDomain::points() const {
  if (is_rectangle()) throw DomainError("rectangle domain has no point list");
  return points_;
}

const Descriptor& PlaneDomain::descriptor() const {
  return is_rectangle() ? rect_[0].descriptor()
                        : points_.front().first.descriptor();
}

ProjectionSet ProjectionSet::of(Interval window) {
  ProjectionSet s;
  s.window_.push_back(std::move(window));
  return s;
}

ProjectionSet ProjectionSet::of_points(std::vector<Element> elements) {
  if (elements.empty()) throw DomainError("empty projection");
  std::sort(elements.begin(), elements.end(),
            [](const Element& a, const Element& b) { return a < b; });
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  ProjectionSet s;
  s.points_ = std::move(elements);
  return s;
}

const Interval& ProjectionSet::window() const {
  if (!is_interval()) throw DomainError("finite projection has no interval");
  return window_[0];
}

const std::vector<Element>& ProjectionSet::points() const {
  if (is_interval()) throw DomainError("interval projection has no point list");
  return points_;
}

bool ProjectionSet::contains(const Element& x) const {
  if (is_interval()) return window_[0].contains(x);
  return std::find(points_.begin(), points_.end(), x) != points_.end();
}

std::vector<Element> ProjectionSet::sample(Rng& rng,
                                           std::size_t samples) const {
  if (!is_interval()) return points_;
  std::vector<Element> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    out.push_back(rng.element_in(window_[0]));
  }
  return out;
}

bool operator==(const ProjectionSet& a, const ProjectionSet& b) {
  if (a.is_interval() != b.is_interval()) return false;
  if (a.is_interval()) return a.window_[0] == b.window_[0];
  return a.points_ == b.points_;
}

std::string to_string(const ProjectionSet& s) {
  if (s.is_interval()) return to_string(s.window());
  std::string out = "{";
  bool first = true;
  for (const Element& e : s.points()) {
    if (!first) out += ",";
    out += to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

DomainProjections project_domain(const PlaneDomain& domain) {
  if (domain.is_rectangle()) {
    return DomainProjections{
        ProjectionSet::of(domain.x_side()), ProjectionSet::of(domain.y_side()),
        ProjectionSet::of(interval_sum(domain.x_side(), domain.y_side()))};
  }
  std::vector<Element> xs;
  std::vector<Element> ys;
  std::vector<Element> sums;
  for (const auto& [u, v] : domain.points()) {
    xs.push_back(u);
    ys.push_back(v);
    sums.push_back(u + v);
  }
  return DomainProjections{ProjectionSet::of_points(std::move(xs)),
                           ProjectionSet::of_points(std::move(ys)),
                           ProjectionSet::of_points(std::move(sums))};
}

QuasiReport check_quasi_extension(
    const std::function<CodomainElement(const Element&)>& f,
    const PlaneDomain& domain, const QuasiExtensionCertificate& cert,
    std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  QuasiReport report;
  report.samples = samples;

  const Descriptor& desc = domain.descriptor();
  for (std::size_t i = 0; i < samples; ++i) {
    Element x = rng.random_element(desc);
    Element y = rng.random_element(desc);
    if (!(cert.witness(x + y) == cert.witness(x) + cert.witness(y))) {
      report.additive_ok = false;
      report.additive_witness_failure = {std::move(x), std::move(y)};
      break;
    }
  }

  const DomainProjections proj = project_domain(domain);
  const auto run = [&](const ProjectionSet& side, const char* name,
                       const CodomainElement& shift) {
    for (Element& p : side.sample(rng, samples)) {
      CodomainElement got = f(p);
      CodomainElement want = cert.witness(p) + shift;
      if (!(got == want)) {
        report.violations.push_back(
            {name, std::move(p), std::move(got), std::move(want)});
      }
    }
  };
  run(proj.x, "D_x", cert.c1);
  run(proj.y, "D_y", cert.c2);
  run(proj.sum, "D_x+y", cert.c1 + cert.c2);
  return report;
}

}  // namespace ordex
