#include "ordex/element.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <utility>

namespace ordex {

namespace {

constexpr std::int64_t kMaxRadicand = 1'000'000'000'000;  // square-free scan bound

bool is_square_free(std::int64_t d) {
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

[[noreturn]] void throw_mismatch(const Descriptor& a, const Descriptor& b) {
  throw DescriptorMismatch("descriptor mismatch: " + a.name() + " vs " + b.name());
}

void require_same(const Element& x, const Element& y) {
  if (!(x.descriptor() == y.descriptor())) throw_mismatch(x.descriptor(), y.descriptor());
}

void require_field(const Descriptor& desc, const char* op) {
  if (!desc.is_field()) throw DomainError(std::string(op) + " requires a field carrier, got " + desc.name());
}

int sign_of(const Rat& q) { return q.sign(); }

// Exact sign of a + b*sqrt(d). When a and b disagree in sign the dominant
// term is decided by comparing a^2 with d*b^2.
int quad_sign(const QuadParts& v, std::int64_t d) {
  const int sa = sign_of(v.a);
  const int sb = sign_of(v.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rat lhs = v.a * v.a;
  const Rat rhs = Rat(d) * v.b * v.b;
  if (lhs == rhs) {
    // would force sqrt(d) = |a/b|, impossible for square-free d >= 2
    throw DomainError("non-canonical quadratic element");
  }
  return lhs > rhs ? sa : sb;
}

}  // namespace

Rat make_rat(Int p, Int q) {
  if (q == 0) throw DomainError("zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rat(std::move(p), std::move(q));
}

Int rat_floor(const Rat& q) {
  Int num = numerator(q);
  const Int den = denominator(q);  // positive by canonical form
  Int quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

Int dyadic_valuation(const Rat& x) { return prime_valuation(2, x); }

Int prime_valuation(const Int& p, const Rat& x) {
  if (x == 0) throw DomainError("valuation of zero");
  Int count = 0;
  Int num = abs(numerator(x));
  while (num % p == 0) {
    num /= p;
    ++count;
  }
  Int den = denominator(x);
  while (den % p == 0) {
    den /= p;
    --count;
  }
  return count;
}

Descriptor Descriptor::integers() { return Descriptor(Carrier::integers, 0); }

Descriptor Descriptor::rationals() { return Descriptor(Carrier::rationals, 0); }

Descriptor Descriptor::quadratic(std::int64_t d) {
  if (d < 2) throw DomainError("quadratic radicand must be >= 2");
  if (d > kMaxRadicand) throw DomainError("quadratic radicand too large");
  if (!is_square_free(d)) throw DomainError("quadratic radicand must be square-free");
  return Descriptor(Carrier::quadratic, d);
}

std::int64_t Descriptor::d() const {
  if (kind_ != Carrier::quadratic) throw DomainError("carrier has no radicand");
  return d_;
}

std::string Descriptor::name() const {
  switch (kind_) {
    case Carrier::integers: return "Z";
    case Carrier::rationals: return "Q";
    case Carrier::quadratic: return "Qsqrt:" + std::to_string(d_);
  }
  return "?";
}

Descriptor parse_descriptor(std::string_view text) {
  if (text == "Z") return Descriptor::integers();
  if (text == "Q") return Descriptor::rationals();
  constexpr std::string_view prefix = "Qsqrt:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("bad carrier: " + std::string(text));
    }
    try {
      return Descriptor::quadratic(std::stoll(digits));
    } catch (const std::out_of_range&) {
      throw ParseError("bad carrier: " + std::string(text));
    }
  }
  throw ParseError("bad carrier: " + std::string(text));
}

Element Element::zero(const Descriptor& desc) { return integer(desc, 0); }

Element Element::one(const Descriptor& desc) { return integer(desc, 1); }

Element Element::integer(const Descriptor& desc, Int n) {
  switch (desc.kind()) {
    case Carrier::integers: return Element(desc, Payload(std::move(n)));
    case Carrier::rationals: return Element(desc, Payload(Rat(std::move(n))));
    case Carrier::quadratic: return Element(desc, Payload(QuadParts{Rat(std::move(n)), Rat(0)}));
  }
  throw DomainError("unknown carrier");
}

Element Element::rational(const Descriptor& desc, Rat value) {
  switch (desc.kind()) {
    case Carrier::integers:
      if (denominator(value) != 1) throw DomainError("non-integral value in the integers carrier");
      return Element(desc, Payload(numerator(value)));
    case Carrier::rationals: return Element(desc, Payload(std::move(value)));
    case Carrier::quadratic: return Element(desc, Payload(QuadParts{std::move(value), Rat(0)}));
  }
  throw DomainError("unknown carrier");
}

Element Element::quadratic(const Descriptor& desc, Rat a, Rat b) {
  if (desc.kind() != Carrier::quadratic) throw DomainError("quadratic element in a non-quadratic carrier");
  return Element(desc, Payload(QuadParts{std::move(a), std::move(b)}));
}

int Element::sign() const {
  switch (desc_.kind()) {
    case Carrier::integers: return std::get<Int>(payload_).sign();
    case Carrier::rationals: return std::get<Rat>(payload_).sign();
    case Carrier::quadratic: return quad_sign(std::get<QuadParts>(payload_), desc_.d());
  }
  return 0;
}

Rat Element::coeff_a() const {
  switch (desc_.kind()) {
    case Carrier::integers: return Rat(std::get<Int>(payload_));
    case Carrier::rationals: return std::get<Rat>(payload_);
    case Carrier::quadratic: return std::get<QuadParts>(payload_).a;
  }
  return Rat(0);
}

Rat Element::coeff_b() const {
  if (desc_.kind() == Carrier::quadratic) return std::get<QuadParts>(payload_).b;
  return Rat(0);
}

const Int& Element::int_value() const {
  if (desc_.kind() != Carrier::integers) throw DomainError("not an integers-carrier element");
  return std::get<Int>(payload_);
}

const Rat& Element::rat_value() const {
  if (desc_.kind() != Carrier::rationals) throw DomainError("not a rationals-carrier element");
  return std::get<Rat>(payload_);
}

const QuadParts& Element::quad_value() const {
  if (desc_.kind() != Carrier::quadratic) throw DomainError("not a quadratic-carrier element");
  return std::get<QuadParts>(payload_);
}

Element Element::operator-() const {
  switch (desc_.kind()) {
    case Carrier::integers: return Element(desc_, Payload(-std::get<Int>(payload_)));
    case Carrier::rationals: return Element(desc_, Payload(-std::get<Rat>(payload_)));
    case Carrier::quadratic: {
      const QuadParts& v = std::get<QuadParts>(payload_);
      return Element(desc_, Payload(QuadParts{-v.a, -v.b}));
    }
  }
  throw DomainError("unknown carrier");
}

Element operator+(const Element& x, const Element& y) {
  require_same(x, y);
  switch (x.desc_.kind()) {
    case Carrier::integers:
      return Element(x.desc_, Element::Payload(std::get<Int>(x.payload_) + std::get<Int>(y.payload_)));
    case Carrier::rationals:
      return Element(x.desc_, Element::Payload(std::get<Rat>(x.payload_) + std::get<Rat>(y.payload_)));
    case Carrier::quadratic: {
      const QuadParts& u = std::get<QuadParts>(x.payload_);
      const QuadParts& v = std::get<QuadParts>(y.payload_);
      return Element(x.desc_, Element::Payload(QuadParts{u.a + v.a, u.b + v.b}));
    }
  }
  throw DomainError("unknown carrier");
}

Element operator-(const Element& x, const Element& y) { return x + (-y); }

Element operator*(const Element& x, const Element& y) {
  require_same(x, y);
  require_field(x.desc_, "multiplication");
  switch (x.desc_.kind()) {
    case Carrier::rationals:
      return Element(x.desc_, Element::Payload(std::get<Rat>(x.payload_) * std::get<Rat>(y.payload_)));
    case Carrier::quadratic: {
      const QuadParts& u = std::get<QuadParts>(x.payload_);
      const QuadParts& v = std::get<QuadParts>(y.payload_);
      const Rat d(x.desc_.d());
      return Element(x.desc_, Element::Payload(QuadParts{u.a * v.a + d * u.b * v.b, u.a * v.b + u.b * v.a}));
    }
    default: break;
  }
  throw DomainError("unknown carrier");
}

Element operator/(const Element& x, const Element& y) { return x * inverse(y); }

std::strong_ordering operator<=>(const Element& x, const Element& y) {
  require_same(x, y);
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const Element& x, const Element& y) { return (x <=> y) == std::strong_ordering::equal; }

std::strong_ordering compare(const Element& x, const Element& y) { return x <=> y; }

Element abs(const Element& x) { return x.sign() < 0 ? -x : x; }

Element int_scale(const Int& n, const Element& x) {
  const Descriptor& desc = x.descriptor();
  switch (desc.kind()) {
    case Carrier::integers: return Element::integer(desc, n * x.int_value());
    case Carrier::rationals: return Element::rational(desc, Rat(n) * x.rat_value());
    case Carrier::quadratic: {
      const QuadParts& v = x.quad_value();
      return Element::quadratic(desc, Rat(n) * v.a, Rat(n) * v.b);
    }
  }
  throw DomainError("unknown carrier");
}

Element rat_scale(const Rat& c, const Element& x) {
  const Descriptor& desc = x.descriptor();
  switch (desc.kind()) {
    case Carrier::integers: {
      const Rat scaled = c * Rat(x.int_value());
      if (denominator(scaled) != 1) throw DomainError("non-integral scalar in the integers carrier");
      return Element::integer(desc, numerator(scaled));
    }
    case Carrier::rationals: return Element::rational(desc, c * x.rat_value());
    case Carrier::quadratic: {
      const QuadParts& v = x.quad_value();
      return Element::quadratic(desc, c * v.a, c * v.b);
    }
  }
  throw DomainError("unknown carrier");
}

Element inverse(const Element& x) {
  const Descriptor& desc = x.descriptor();
  require_field(desc, "inverse");
  if (x.is_zero()) throw DomainError("inverse of zero");
  if (desc.kind() == Carrier::rationals) return Element::rational(desc, 1 / x.rat_value());
  // (a + b*sqrt(d))^-1 = (a - b*sqrt(d)) / (a^2 - d*b^2)
  const QuadParts& v = x.quad_value();
  const Rat norm = v.a * v.a - Rat(desc.d()) * v.b * v.b;
  return Element::quadratic(desc, v.a / norm, -v.b / norm);
}

Element pow(const Element& x, const Int& n) {
  const Descriptor& desc = x.descriptor();
  require_field(desc, "pow");
  if (n < 0) return inverse(pow(x, -n));
  Element result = Element::one(desc);
  Element base = x;
  Int e = n;
  while (e > 0) {
    if ((e & 1) != 0) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Element dense_witness(const Element& a, const Element& b) {
  require_same(a, b);
  if (!a.descriptor().is_dense()) throw DomainError("carrier is not dense");
  if (!(a < b)) throw DomainError("empty interval has no witness");
  return rat_scale(Rat(1, 2), a + b);
}

namespace {

std::string format_rat(const Rat& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

// [sign] digits [ "/" digits ]; returns false on any deviation.
bool parse_rat_token(std::string_view s, bool allow_sign, Rat& out) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < s.size() && (s[i] == '+' || s[i] == '-')) {
    negative = s[i] == '-';
    ++i;
  }
  std::size_t num_begin = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_begin) return false;
  Int num{std::string(s.substr(num_begin, i - num_begin))};
  Int den = 1;
  if (i < s.size()) {
    if (s[i] != '/') return false;
    ++i;
    std::size_t den_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_begin || i != s.size()) return false;
    den = Int{std::string(s.substr(den_begin, i - den_begin))};
    if (den == 0) return false;
  } else if (i != s.size()) {
    return false;
  }
  if (negative) num = -num;
  out = Rat(num, den);
  return true;
}

[[noreturn]] void bad_element(std::string_view text) {
  throw ParseError("cannot parse element: " + std::string(text));
}

}  // namespace

std::string to_string(const Element& x) {
  switch (x.descriptor().kind()) {
    case Carrier::integers: {
      std::ostringstream os;
      os << x.int_value();
      return os.str();
    }
    case Carrier::rationals: return format_rat(x.rat_value());
    case Carrier::quadratic: {
      const QuadParts& v = x.quad_value();
      if (v.b == 0) return format_rat(v.a);
      std::string out = format_rat(v.a);
      out += v.b > 0 ? '+' : '-';
      out += format_rat(abs(v.b));
      out += "*sqrt(" + std::to_string(x.descriptor().d()) + ")";
      return out;
    }
  }
  throw DomainError("unknown carrier");
}

Element parse_element(std::string_view text, const Descriptor& desc) {
  if (text.empty()) bad_element(text);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) bad_element(text);
  }

  // a (+|-) b*sqrt(d): the separator is the first sign past position 0.
  const std::size_t sep = text.find_first_of("+-", 1);
  if (sep != std::string_view::npos) {
    if (desc.kind() != Carrier::quadratic) bad_element(text);
    Rat a;
    if (!parse_rat_token(text.substr(0, sep), true, a)) bad_element(text);
    std::string_view rest = text.substr(sep + 1);
    constexpr std::string_view marker = "*sqrt(";
    const std::size_t mark = rest.find(marker);
    if (mark == std::string_view::npos || rest.back() != ')') bad_element(text);
    Rat b;
    if (!parse_rat_token(rest.substr(0, mark), false, b)) bad_element(text);
    const std::string_view digits = rest.substr(mark + marker.size(), rest.size() - mark - marker.size() - 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) bad_element(text);
    if (std::string(digits) != std::to_string(desc.d())) {
      throw ParseError("radicand in \"" + std::string(text) + "\" does not match carrier " + desc.name());
    }
    if (text[sep] == '-') b = -b;
    return Element::quadratic(desc, std::move(a), std::move(b));
  }

  Rat value;
  if (!parse_rat_token(text, true, value)) bad_element(text);
  if (desc.kind() == Carrier::integers && denominator(value) != 1) bad_element(text);
  return Element::rational(desc, std::move(value));
}

std::ostream& operator<<(std::ostream& os, const Element& x) { return os << to_string(x); }

}  // namespace ordex
