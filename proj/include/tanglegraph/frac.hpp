#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tg {

using Integer = boost::multiprecision::cpp_int;

/// Reduced fraction num/den with den >= 0. The infinite slope is stored as 1/0
/// and zero as 0/1, so equal slopes compare equal member-wise.
class Slope {
 public:
  Slope() : num_(0), den_(1) {}

  /// Throws ZeroZero for 0/0.
  static Slope reduce(Integer p, Integer q);
  static Slope integer(Integer n) { return Slope(std::move(n), 1, Unchecked{}); }
  static Slope infinity() { return Slope(1, 0, Unchecked{}); }

  /// Parses "p/q" or "p"; throws ParseError.
  static Slope parse(std::string_view text);

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_infinite() const noexcept { return den_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Largest integer <= num/den. Requires a finite slope.
  Integer floor() const;

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

  /// Orders finite slopes by value; infinity compares greater than all.
  friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

 private:
  struct Unchecked {};
  Slope(Integer p, Integer q, Unchecked) : num_(std::move(p)), den_(std::move(q)) {}

  Integer num_;
  Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// Exact arithmetic on finite slopes. Division by zero throws DivisionByZero.
Slope operator+(const Slope& a, const Slope& b);
Slope operator-(const Slope& a, const Slope& b);
Slope operator*(const Slope& a, const Slope& b);
Slope operator/(const Slope& a, const Slope& b);
Slope operator-(const Slope& a);

/// 1/s, with 1/0 <-> 0/1.
Slope reciprocal(const Slope& s);

/// Terms of a_k + 1/(a_{k-1} + 1/(... + 1/a_1)), stored leading term first.
struct CFExpansion {
  std::vector<Integer> terms;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
};

/// All terms share the sign of s; zero expands to [0]. Throws InfiniteSlope.
CFExpansion cf_expand(const Slope& s);

/// Throws DivisionByZero if an intermediate denominator vanishes.
Slope cf_eval(const CFExpansion& c);

/// Quarter turn of a tangle: p/q -> -q/p.
Slope slope_rotate(const Slope& s);

}  // namespace tg
