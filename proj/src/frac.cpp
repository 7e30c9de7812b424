#include "tanglegraph/frac.hpp"

#include "tanglegraph/error.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cctype>
#include <ostream>

namespace tg {

namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_int(a), abs_int(b));
}

void require_finite(const Slope& s, const char* op) {
  if (s.is_infinite()) {
    throw Error(ErrorCode::InfiniteSlope, std::string(op) + ": infinite slope");
  }
}

}  // namespace

Slope Slope::reduce(Integer p, Integer q) {
  if (p == 0 && q == 0) {
    throw Error(ErrorCode::ZeroZero, "slope 0/0 is undefined");
  }
  if (q == 0) return infinity();
  if (p == 0) return Slope();
  if (q < 0) {
    p = -p;
    q = -q;
  }
  Integer g = gcd_int(p, q);
  return Slope(p / g, q / g, Unchecked{});
}

Slope Slope::parse(std::string_view text) {
  auto fail = [&](std::size_t pos, const std::string& msg) -> ParseError {
    return ParseError(1, static_cast<int>(pos) + 1, msg + " in slope '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto read_int = [&]() -> Integer {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw fail(start, "expected integer");
    Integer v(std::string(text.substr(digits, i - digits)));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return text[start] == '-' ? Integer(-v) : v;
  };
  Integer p = read_int();
  Integer q = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    q = read_int();
  }
  if (i != text.size()) throw fail(i, "unexpected character");
  if (p == 0 && q == 0) throw fail(0, "0/0 is not a slope");
  return reduce(std::move(p), std::move(q));
}

Integer Slope::floor() const {
  require_finite(*this, "floor");
  Integer q = num_ / den_;  // truncates toward zero
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

std::string Slope::str() const { return num_.str() + "/" + den_.str(); }

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  Integer lhs = a.num() * b.den();
  Integer rhs = b.num() * a.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

Slope operator+(const Slope& a, const Slope& b) {
  require_finite(a, "+");
  require_finite(b, "+");
  return Slope::reduce(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

Slope operator-(const Slope& a) {
  if (a.is_infinite()) return a;
  return Slope::reduce(-a.num(), a.den());
}

Slope operator-(const Slope& a, const Slope& b) { return a + (-b); }

Slope operator*(const Slope& a, const Slope& b) {
  require_finite(a, "*");
  require_finite(b, "*");
  return Slope::reduce(a.num() * b.num(), a.den() * b.den());
}

Slope operator/(const Slope& a, const Slope& b) {
  require_finite(a, "/");
  require_finite(b, "/");
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero slope");
  return Slope::reduce(a.num() * b.den(), a.den() * b.num());
}

Slope reciprocal(const Slope& s) { return Slope::reduce(s.den(), s.num()); }

CFExpansion cf_expand(const Slope& s) {
  require_finite(s, "cf_expand");
  CFExpansion out;
  if (s.is_zero()) {
    out.terms.push_back(0);
    return out;
  }
  const bool negative = s.num() < 0;
  Integer p = abs_int(s.num());
  Integer q = s.den();
  // Euclid on |s|; every quotient after the first is >= 1.
  while (q != 0) {
    Integer a = p / q;
    Integer r = p - a * q;
    out.terms.push_back(negative ? Integer(-a) : a);
    p = q;
    q = r;
  }
  return out;
}

Slope cf_eval(const CFExpansion& c) {
  if (c.terms.empty()) {
    throw Error(ErrorCode::DivisionByZero, "empty continued fraction");
  }
  // Innermost term is the last one.
  Integer p = c.terms.back();
  Integer q = 1;
  for (auto it = c.terms.rbegin() + 1; it != c.terms.rend(); ++it) {
    if (p == 0) {
      throw Error(ErrorCode::DivisionByZero, "continued fraction has a vanishing denominator");
    }
    // value = a + q/p
    Integer np = (*it) * p + q;
    q = p;
    p = std::move(np);
  }
  return Slope::reduce(p, q);
}

Slope slope_rotate(const Slope& s) { return Slope::reduce(-s.den(), s.num()); }

}  // namespace tg
