// Acceptance gate: one self-contained binary, one verdict line per
// criterion, nonzero exit if any criterion fails. Criteria run at full
// advertised scale, so this binary is slower than the unit suites.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ordex/division.hpp"
#include "ordex/element.hpp"
#include "ordex/extension.hpp"
#include "ordex/families.hpp"
#include "ordex/interval.hpp"
#include "ordex/quasi_extension.hpp"
#include "ordex/rng.hpp"
#include "ordex/uniqueness.hpp"
#include "oracles.hpp"
#include "strata.hpp"

namespace {

using namespace ordex;
using Clock = std::chrono::steady_clock;

const Descriptor kZ = Descriptor::integers();
const Descriptor kQ = Descriptor::rationals();
const Descriptor kQ2 = Descriptor::quadratic(2);
const Descriptor kQ3 = Descriptor::quadratic(3);

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << s << "s";
  return out.str();
}

Element nonzero(Rng& rng, const Descriptor& desc, std::uint64_t mag) {
  for (;;) {
    Element e = rng.random_element(desc, mag);
    if (!e.is_zero()) return e;
  }
}

Element positive(Rng& rng, const Descriptor& desc, std::uint64_t mag) {
  Element e = nonzero(rng, desc, mag);
  return e.is_positive() ? e : -e;
}

// Bases too close to 1 make multiplicative quotients astronomically large
// in exact arithmetic; random draws keep a fixed distance (constructed
// cases cover the near-1 regime).
bool near_one(const Element& x) {
  const Element gap = Element::rational(x.descriptor(), Rat(1, 100));
  return compare(abs(x - Element::one(x.descriptor())), gap) ==
         std::strong_ordering::less;
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (detail.empty()) detail = why;
  }
};

// --- criterion 1: additive division soundness at 10^4 per carrier --------

Outcome criterion_division_soundness() {
  Outcome out;
  std::string times;
  Rng rng(101);
  for (const Descriptor& desc : {kZ, kQ, kQ2, kQ3}) {
    const Clock::time_point t0 = Clock::now();
    for (int i = 0; i < 10000; ++i) {
      const Element x = rng.random_element(desc, 1000);
      const Element y = nonzero(rng, desc, 1000);
      const DivisionResult d = euclidean_div(x, y);
      if (!(x == int_scale(d.quotient, y) + d.remainder)) {
        out.fail("reconstruction failed over " + desc.name());
        return out;
      }
      if (d.remainder.sign() < 0 ||
          compare(d.remainder, abs(y)) != std::strong_ordering::less) {
        out.fail("remainder outside [0,|y|[ over " + desc.name());
        return out;
      }
    }
    const double dt = elapsed(t0);
    if (!times.empty()) times += ", ";
    times += desc.name() + " " + fmt_seconds(dt);
    if (dt >= 5.0) out.fail(desc.name() + " exceeded 5s: " + fmt_seconds(dt));
  }
  if (out.pass) out.detail = "10^4 per carrier; " + times;
  return out;
}

// --- criterion 2: quotient uniqueness under a +/-20 brute-force scan -----

Outcome criterion_division_uniqueness() {
  Outcome out;
  Rng rng(102);
  for (const Descriptor& desc : {kZ, kQ, kQ2, kQ3}) {
    for (int i = 0; i < 250; ++i) {
      const Element x = rng.random_element(desc, 1000);
      const Element y = nonzero(rng, desc, 1000);
      const DivisionResult d = euclidean_div(x, y);
      const auto found = oracle::scan_quotients(x, y, d.quotient, 20);
      if (found.size() != 1 || found.front() != d.quotient) {
        out.fail("scan found " + std::to_string(found.size()) +
                 " quotients over " + desc.name());
        return out;
      }
    }
  }
  out.detail = "1000 instances, scan radius 20";
  return out;
}

// --- criterion 3: multiplicative soundness + uniqueness ------------------

Outcome criterion_multiplicative_division() {
  Outcome out;
  Rng rng(103);
  for (const Descriptor& desc : {kQ, kQ2}) {
    const Element one = Element::one(desc);
    int done = 0;
    while (done < 10000) {
      const Element x = positive(rng, desc, 60);
      const Element y = positive(rng, desc, 12);
      if (near_one(y)) continue;
      ++done;
      const DivisionResult d = multiplicative_div(x, y);
      if (!(x == pow(y, d.quotient) * d.remainder)) {
        out.fail("reconstruction failed over " + desc.name());
        return out;
      }
      const bool up = compare(y, one) == std::strong_ordering::greater;
      const bool window =
          up ? compare(one, d.remainder) != std::strong_ordering::greater &&
                   compare(d.remainder, y) == std::strong_ordering::less
             : compare(y, d.remainder) == std::strong_ordering::less &&
                   compare(d.remainder, one) != std::strong_ordering::greater;
      if (!window) {
        out.fail("remainder outside the canonical window over " + desc.name());
        return out;
      }
    }
    done = 0;
    while (done < 1000) {
      const Element x = positive(rng, desc, 60);
      const Element y = positive(rng, desc, 12);
      if (near_one(y)) continue;
      ++done;
      const DivisionResult d = multiplicative_div(x, y);
      const auto found = oracle::scan_exponents(x, y, d.quotient, 20);
      if (found.size() != 1 || found.front() != d.quotient) {
        out.fail("exponent scan found " + std::to_string(found.size()) +
                 " candidates over " + desc.name());
        return out;
      }
    }
    done = 0;
    while (done < 500) {
      const Element y = positive(rng, desc, 9);
      if (near_one(y) || y == one) continue;
      ++done;
      const Int z = rng.int_in(-8, 8);
      const DivisionResult d = multiplicative_div(pow(y, z), y);
      if (d.quotient != z || !(d.remainder == one)) {
        out.fail("exact power missed the r=1 branch over " + desc.name());
        return out;
      }
    }
  }
  out.detail = "10^4 + 10^3 scans + 500 exact powers per field";
  return out;
}

// --- criterion 4: extension correctness over 20 configs per carrier ------

struct ExtensionConfig {
  Rat lambda;
  Element eps;
  Element y0;
};

ExtensionConfig draw_config(Rng& rng, const Descriptor& desc) {
  for (;;) {
    const Rat lambda = rng.small_rat(20, 20);
    const Element eps = positive(rng, desc, 8);
    const Element y0 =
        rng.element_in(Interval::open(Element::zero(desc), eps));
    Rng probe(7);
    if (!strata::add_case_c(probe, y0, eps).has_value()) continue;
    return {lambda, eps, y0};
  }
}

Outcome criterion_extension() {
  Outcome out;
  const Clock::time_point t0 = Clock::now();
  Rng rng(104);
  for (const Descriptor& desc : {kQ, kQ2, kQ3}) {
    for (int cfg = 0; cfg < 20; ++cfg) {
      const ExtensionConfig c = draw_config(rng, desc);
      const PartialFunction f = linear_family(c.lambda, c.eps);
      const ExtendedFunction a =
          extend_additive(f, c.y0, HypothesisPolicy::sampled(50, 104));

      for (int i = 0; i < 400; ++i) {
        const auto [xl, yl] = strata::add_pair(rng, c.y0, true);
        const auto [xh, yh] = strata::add_pair(rng, c.y0, false);
        if (!(a(xl + yl) == a(xl) + a(yl)) ||
            !(a(xh + yh) == a(xh) + a(yh))) {
          out.fail("additivity failed over " + desc.name());
          return out;
        }
      }
      for (int i = 0; i < 200; ++i) {
        const Element u = rng.random_element(desc, 100000);
        const Element v = rng.random_element(desc, 100000);
        if (!(a(u + v) == a(u) + a(v))) {
          out.fail("wide additivity failed over " + desc.name());
          return out;
        }
      }

      for (int i = 0; i < 250; ++i) {
        const Element xa = strata::add_case_a(rng, c.eps);
        const Element xb = strata::add_case_b(rng, c.y0);
        const auto xc = strata::add_case_c(rng, c.y0, c.eps);
        const Element xo = strata::add_outer(rng, c.eps);
        if (!xc.has_value()) {
          out.fail("stratum C unexpectedly empty");
          return out;
        }
        if (!(a(xa) == f(xa)) || !(a(xb) == f(xb)) || !(a(*xc) == f(*xc)) ||
            !(a(xo) == f(xo))) {
          out.fail("domain agreement failed over " + desc.name());
          return out;
        }
      }

      int far = 0;
      while (far < 1000) {
        const Element x = rng.random_element(desc, 1000000);
        if (f.domain().contains(x)) continue;
        ++far;
        if (!(a(x) == CodomainElement::of(rat_scale(c.lambda, x)))) {
          out.fail("far point disagreed with lambda*x over " + desc.name());
          return out;
        }
      }
    }
  }
  const double dt = elapsed(t0);
  if (dt >= 30.0) out.fail("exceeded 30s: " + fmt_seconds(dt));
  if (out.pass) {
    out.detail = "20 configs x {Q, Qsqrt:2, Qsqrt:3}, " + fmt_seconds(dt);
  }
  return out;
}

// --- criterion 5: base-point independence --------------------------------

Outcome criterion_base_point_independence() {
  Outcome out;
  Rng rng(105);
  for (const Descriptor& desc : {kQ, kQ2, kQ3}) {
    for (int cfg = 0; cfg < 20; ++cfg) {
      const ExtensionConfig c = draw_config(rng, desc);
      Element other = c.y0;
      while (other == c.y0) {
        other = rng.element_in(Interval::open(Element::zero(desc), c.eps));
      }
      const ExtendedFunction a1 = extend_additive(
          linear_family(c.lambda, c.eps), c.y0, HypothesisPolicy::trusted());
      const ExtendedFunction a2 = extend_additive(
          linear_family(c.lambda, c.eps), other, HypothesisPolicy::trusted());
      for (int i = 0; i < 1000; ++i) {
        const Element x = rng.random_element(desc, 100000);
        if (!(a1(x) == a2(x))) {
          out.fail("base points disagreed over " + desc.name());
          return out;
        }
      }
    }
  }
  out.detail = "20 configs x 3 carriers x 10^3 points";
  return out;
}

// --- criterion 6: logarithmic extension ----------------------------------

Outcome criterion_logarithmic_extension() {
  Outcome out;
  Rng rng(106);
  const Element one = Element::one(kQ);
  const std::vector<Element> epsilons = {
      Element::rational(kQ, Rat(4)), Element::rational(kQ, Rat(3)),
      Element::rational(kQ, Rat(5, 2)), Element::rational(kQ, Rat(9, 4)),
      Element::rational(kQ, Rat(7, 2))};
  for (const Element& eps : epsilons) {
    Element y0 = one;
    for (;;) {
      const Element lo = one + rat_scale(Rat(1, 4), eps - one);
      y0 = rng.element_in(Interval::open(lo, eps));
      Rng probe(7);
      if (strata::log_case_c(probe, y0, eps).has_value()) break;
    }
    const PartialFunction f = dyadic_log_family(eps);
    const ExtendedFunction l =
        extend_logarithmic(f, y0, HypothesisPolicy::sampled(50, 106));

    for (int i = 0; i < 350; ++i) {
      const auto [xl, yl] = strata::log_pair(rng, y0, true);
      const auto [xh, yh] = strata::log_pair(rng, y0, false);
      if (!(l(xl * yl) == l(xl) + l(yl)) || !(l(xh * yh) == l(xh) + l(yh))) {
        out.fail("multiplicative law failed at epsilon " + to_string(eps));
        return out;
      }
    }
    for (int i = 0; i < 300; ++i) {
      const Element x = positive(rng, kQ, 1000);
      const Element y = positive(rng, kQ, 1000);
      if (!(l(x * y) == l(x) + l(y))) {
        out.fail("multiplicative law failed on wide pairs");
        return out;
      }
    }
    for (int i = 0; i < 250; ++i) {
      const Element xa = strata::log_case_a(rng, eps);
      const Element xb = strata::log_case_b(rng, y0);
      const auto xc = strata::log_case_c(rng, y0, eps);
      const Element xo = strata::log_outer(rng, eps);
      if (!xc.has_value()) {
        out.fail("logarithmic stratum C unexpectedly empty");
        return out;
      }
      if (!(l(xa) == f(xa)) || !(l(xb) == f(xb)) || !(l(*xc) == f(*xc)) ||
          !(l(xo) == f(xo))) {
        out.fail("domain agreement failed at epsilon " + to_string(eps));
        return out;
      }
    }
  }

  const ExtendedFunction frozen = extend_logarithmic(
      dyadic_log_family(Element::rational(kQ, Rat(4))),
      Element::rational(kQ, Rat(2)), HypothesisPolicy::trusted());
  if (!(frozen(Element::rational(kQ, Rat(32))) ==
        CodomainElement::of(Element::integer(kZ, 5)))) {
    out.fail("l(32) != 5");
  }
  if (out.pass) out.detail = "5 configs, 10^3 pairs + 10^3 domain points each";
  return out;
}

// --- criterion 7: the quasi-extension builtin ----------------------------

Outcome criterion_quasi_extension() {
  Outcome out;
  const QuasiExample ex = aczel_example();
  const QuasiReport good =
      check_quasi_extension(ex.f, ex.domain, ex.certificate, 500, 1);
  if (!good.pass() || !good.additive_ok) {
    out.fail("certificate (a=0, c1=0, c2=1) did not pass");
    return out;
  }

  QuasiExtensionCertificate zeroed = ex.certificate;
  zeroed.c2 = CodomainElement::of(Element::integer(kZ, 0));
  const QuasiReport bad =
      check_quasi_extension(ex.f, ex.domain, zeroed, 500, 1);
  if (bad.pass() || bad.violations.empty()) {
    out.fail("c2=0 was not refuted");
    return out;
  }
  for (const QuasiViolation& v : bad.violations) {
    if (v.projection == "D_x") {
      out.fail("c2=0 must not disturb D_x");
      return out;
    }
  }
  out.detail = "pass with c2=1, " + std::to_string(bad.violations.size()) +
               " violations with c2=0";
  return out;
}

// --- criterion 8: proof-path identities ----------------------------------

Outcome criterion_proof_path() {
  Outcome out;
  Rng rng(108);
  int additive_checked = 0;
  for (const Descriptor& desc : {kQ, kZ, kQ2, kQ3}) {
    for (int i = 0; i < 250; ++i) {
      const Rat lambda = desc == kZ ? Rat(rng.int_in(-50, 50))
                                    : rng.small_rat(50, 30);
      const Element step = desc == kZ
                               ? Element::integer(kZ, rng.int_in(1, 20))
                               : positive(rng, desc, 30);
      const Element x = rng.random_element(desc, 1000000);
      const DivisionResult d = euclidean_div(x, step);
      const Element lhs = rat_scale(lambda, x);
      const Element rhs = int_scale(d.quotient, rat_scale(lambda, step)) +
                          rat_scale(lambda, d.remainder);
      if (!(lhs == rhs)) {
        out.fail("additive proof path failed over " + desc.name());
        return out;
      }
      ++additive_checked;
    }
  }

  int log_checked = 0;
  while (log_checked < 1000) {
    Element step = positive(rng, kQ, 40);
    if (compare(step, Element::one(kQ)) == std::strong_ordering::less) {
      step = inverse(step);
    }
    if (step == Element::one(kQ) || near_one(step)) continue;
    const Element x = positive(rng, kQ, 1000000);
    const DivisionResult d = multiplicative_div(x, step);
    const bool dyadic = (log_checked % 2) == 0;
    if (dyadic) {
      const Int lhs = dyadic_valuation(x.rat_value());
      const Int rhs = d.quotient * dyadic_valuation(step.rat_value()) +
                      dyadic_valuation(d.remainder.rat_value());
      if (lhs != rhs) {
        out.fail("dyadic proof path failed");
        return out;
      }
    } else {
      for (const Int& p : {Int(2), Int(3), Int(5)}) {
        const Int lhs = prime_valuation(p, x.rat_value());
        const Int rhs = d.quotient * prime_valuation(p, step.rat_value()) +
                        prime_valuation(p, d.remainder.rat_value());
        if (lhs != rhs) {
          out.fail("valuation proof path failed at p=" + p.str());
          return out;
        }
      }
    }
    ++log_checked;
  }
  out.detail = std::to_string(additive_checked) + " additive + " +
               std::to_string(log_checked) + " logarithmic instances";
  return out;
}

// --- criterion 9: interval algebra laws ----------------------------------

Interval random_open(Rng& rng, const Descriptor& desc, bool positive_only) {
  const Element lo = positive_only ? positive(rng, desc, 50)
                                   : rng.random_element(desc, 50);
  const Element width = positive(rng, desc, 50);
  return Interval::open(lo, lo + width);
}

Outcome criterion_interval_laws() {
  Outcome out;
  Rng rng(109);
  const std::vector<Descriptor> fields = {kQ, kQ2};

  for (int i = 0; i < 10000; ++i) {
    const Descriptor& desc = fields[i % 2];
    const Interval I = random_open(rng, desc, false);
    const Element gamma = rng.random_element(desc, 50);
    const Interval T = translate(gamma, I);
    const Element inside = rng.element_in(I);
    if (!T.contains(gamma + inside) || T.contains(gamma + I.lo()) ||
        T.contains(gamma + I.hi())) {
      out.fail("translation equivalence failed");
      return out;
    }
  }
  {
    const Interval zi = parse_interval("]0,3[", kZ);
    const Element two = Element::integer(kZ, 2);
    if (!translate(two, zi).contains(Element::integer(kZ, 4))) {
      out.fail("integer translation failed");
      return out;
    }
    bool refused = false;
    try {
      interval_sum(zi, zi);
    } catch (const DomainError&) {
      refused = true;
    }
    if (!refused) {
      out.fail("interval_sum accepted the integers carrier");
      return out;
    }
  }

  for (int i = 0; i < 10000; ++i) {
    const Descriptor& desc = fields[i % 2];
    const Interval I = random_open(rng, desc, false);
    const Interval J = random_open(rng, desc, false);
    const Interval S = interval_sum(I, J);
    if (!S.contains(rng.element_in(I) + rng.element_in(J))) {
      out.fail("sum membership failed");
      return out;
    }
    const Element x = rng.element_in(S);
    const auto [u, v] = split_sum(x, I, J);
    if (!I.contains(u) || !J.contains(v) || !(u + v == x)) {
      out.fail("split_sum witness invalid");
      return out;
    }
  }

  for (int i = 0; i < 10000; ++i) {
    const Descriptor& desc = fields[i % 2];
    const Interval I = random_open(rng, desc, false);
    const Element gamma = positive(rng, desc, 50);
    const Interval S = scale(gamma, I);
    if (!S.contains(gamma * rng.element_in(I)) ||
        S.contains(gamma * I.hi())) {
      out.fail("scale equivalence failed");
      return out;
    }
    if (!(scale(inverse(gamma), S) == I)) {
      out.fail("scale round trip failed");
      return out;
    }
  }

  for (int i = 0; i < 10000; ++i) {
    const Descriptor& desc = fields[i % 2];
    const Interval I = random_open(rng, desc, true);
    const Interval J = random_open(rng, desc, true);
    const Interval P = interval_product(I, J);
    if (!P.contains(rng.element_in(I) * rng.element_in(J))) {
      out.fail("product membership failed");
      return out;
    }
    const Element x = rng.element_in(P);
    const auto [u, v] = split_product(x, I, J);
    if (!I.contains(u) || !J.contains(v) || !(u * v == x)) {
      out.fail("split_product witness invalid");
      return out;
    }
  }

  out.detail = "10^4 cases per law, integers refusal verified";
  return out;
}

// --- criterion 10: CLI golden files --------------------------------------

struct CliCase {
  int exit_code;
  std::string golden_file;
  std::vector<std::string> args;
};

std::vector<CliCase> load_manifest(const std::string& dir, std::string& error) {
  std::vector<CliCase> cases;
  std::ifstream in(dir + "/manifest.txt");
  if (!in.good()) {
    error = "cannot open " + dir + "/manifest.txt";
    return cases;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      const std::size_t bar = line.find('|', pos);
      fields.push_back(line.substr(
          pos, bar == std::string::npos ? std::string::npos : bar - pos));
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    if (fields.size() < 3) {
      error = "malformed manifest line: " + line;
      return cases;
    }
    cases.push_back({std::stoi(fields[0]), fields[1],
                     {fields.begin() + 2, fields.end()}});
  }
  return cases;
}

Outcome criterion_cli_golden() {
  Outcome out;
  const char* cli = std::getenv("ORDEX_CLI");
  if (cli == nullptr) {
    out.fail("ORDEX_CLI not set");
    return out;
  }
  const std::string dir = GOLDEN_DIR;
  std::string error;
  const std::vector<CliCase> cases = load_manifest(dir, error);
  if (!error.empty() || cases.empty()) {
    out.fail(error.empty() ? "empty manifest" : error);
    return out;
  }
  for (const CliCase& c : cases) {
    std::string cmd = std::string("'") + cli + "'";
    for (const std::string& a : c.args) cmd += " '" + a + "'";
    cmd += " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
      out.fail("popen failed for " + c.golden_file);
      return out;
    }
    std::string got;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) got.append(buf, n);
    const int status = pclose(pipe);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != c.exit_code) {
      out.fail(c.golden_file + ": wrong exit code");
      return out;
    }
    std::ifstream want_in(dir + "/" + c.golden_file, std::ios::binary);
    std::ostringstream want;
    want << want_in.rdbuf();
    if (!want_in.good() || got != want.str()) {
      out.fail(c.golden_file + ": output differs");
      return out;
    }
  }
  out.detail = std::to_string(cases.size()) + " commands byte-identical";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* label;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"criterion 1: Euclidean division soundness",
       criterion_division_soundness},
      {"criterion 2: quotient uniqueness under brute-force scan",
       criterion_division_uniqueness},
      {"criterion 3: multiplicative division soundness + uniqueness",
       criterion_multiplicative_division},
      {"criterion 4: extension correctness (law, agreement, far points)",
       criterion_extension},
      {"criterion 5: base-point independence", criterion_base_point_independence},
      {"criterion 6: logarithmic extension", criterion_logarithmic_extension},
      {"criterion 7: quasi-extension builtin", criterion_quasi_extension},
      {"criterion 8: proof-path identities", criterion_proof_path},
      {"criterion 9: interval algebra laws", criterion_interval_laws},
      {"criterion 10: CLI golden files", criterion_cli_golden},
  };

  int failures = 0;
  for (const Entry& entry : criteria) {
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << entry.label;
    if (!outcome.detail.empty()) std::cout << " -- " << outcome.detail;
    std::cout << "\n";
  }
  if (failures == 0) {
    std::cout << "acceptance: all " << criteria.size() << " criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " of " << criteria.size()
            << " criteria FAILED\n";
  return 1;
}
