#pragma once

#include "tanglegraph/diagram.hpp"
#include "tanglegraph/frac.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tg {

/// Integer Laurent polynomial in A. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, long long coef = 1);
  static LaurentPoly constant(long long c) { return monomial(0, c); }

  const std::map<int, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coef(int exponent) const;
  void add(int exponent, long long coef);

  /// A -> A^-1.
  LaurentPoly inverted() const;

  /// Sorted `exponent:coefficient` pairs joined by ", "; "0" when zero.
  std::string str() const;
  static LaurentPoly parse(std::string_view text);

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<int, long long> terms_;
};

constexpr int kDefaultBracketCap = 22;

/// Kauffman bracket with <O> = 1 and loop value -A^2 - A^-2. Throws TooLarge
/// above `cap` crossings.
LaurentPoly kauffman_bracket(const Diagram& g, int cap = kDefaultBracketCap);
LaurentPoly kauffman_bracket(const PDCode& pd, int cap = kDefaultBracketCap);

/// (-A^3)^(-w) <D>; the Jones polynomial with t = A^-4.
LaurentPoly jones(const Diagram& g, int cap = kDefaultBracketCap);
LaurentPoly jones(const PDCode& pd, int cap = kDefaultBracketCap);

/// |f(e^{i pi/4})| for a normalized bracket f, which is the link determinant.
Integer jones_determinant(const LaurentPoly& f);

/// |det| of the reduced Goeritz matrix. Split diagrams give 0.
Integer goeritz_determinant(const Diagram& g);
Integer goeritz_determinant(const PDCode& pd);

/// First minor of the Fox coloring matrix built from a Gauss code. Empty
/// when some component has no undercrossing.
std::optional<Integer> coloring_determinant(const GaussCode& code);

enum class Verdict { CertifiedUnknot, CertifiedKnotted, Inconclusive };

const char* to_string(Verdict v);

struct UnknotVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::string evidence;
  int simplified_crossings = 0;
};

struct CertifyOptions {
  int bracket_cap = kDefaultBracketCap;
  int r3_depth = 3;
};

UnknotVerdict certify_unknot(const PDCode& pd, const CertifyOptions& opts = {});

}  // namespace tg
