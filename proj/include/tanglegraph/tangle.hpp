#pragma once

#include "tanglegraph/frac.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tg {

using Bindings = std::map<std::string, Integer>;

/// Integer-valued expression over named parameters; used for twist counts and
/// rational leaves inside templates. Ground expressions are plain literals
/// after instantiation.
class IntExpr {
 public:
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul };

  IntExpr() : IntExpr(Integer(0)) {}
  IntExpr(Integer value);  // NOLINT(google-explicit-constructor)
  IntExpr(long long value) : IntExpr(Integer(value)) {}  // NOLINT
  IntExpr(int value) : IntExpr(Integer(value)) {}        // NOLINT

  static IntExpr var(std::string name);
  static IntExpr neg(IntExpr a);
  static IntExpr add(IntExpr a, IntExpr b);
  static IntExpr sub(IntExpr a, IntExpr b);
  static IntExpr mul(IntExpr a, IntExpr b);

  Kind kind() const noexcept;
  bool is_ground() const;
  /// Literal value; requires kind() == Literal.
  const Integer& value() const;
  const std::string& name() const;

  /// Throws UnboundParam for unbound variables.
  Integer eval(const Bindings& bindings) const;
  void collect_vars(std::vector<std::string>& out) const;
  std::string str() const;

  friend bool operator==(const IntExpr& a, const IntExpr& b);

 private:
  struct Node;
  explicit IntExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

enum class Closure { Numerator, Denominator };

/// Immutable algebraic tangle expression. Boundary points are NW, NE, SW, SE;
/// the zero tangle joins NW-NE and SW-SE, the infinity tangle NW-SW and NE-SE.
class TangleExpr {
 public:
  enum class Kind {
    Zero,
    Infinity,
    HTwist,
    VTwist,
    HSum,
    VSum,
    Rotate90,
    Mirror,
    RationalLeaf,
    ParamSlot,
    Closed,
  };

  static TangleExpr zero();
  static TangleExpr infinity();
  /// Adds |n| crossings between NE and SE; each positive crossing adds +1 to
  /// the fraction.
  static TangleExpr htwist(TangleExpr child, IntExpr n);
  /// Adds |n| crossings between SW and SE; fraction s -> 1/(1/s + n).
  static TangleExpr vtwist(TangleExpr child, IntExpr n);
  static TangleExpr hsum(TangleExpr left, TangleExpr right);
  static TangleExpr vsum(TangleExpr top, TangleExpr bottom);
  /// Quarter turn counterclockwise; fraction s -> -1/s.
  static TangleExpr rotate(TangleExpr child);
  /// Switches every crossing; fraction s -> -s.
  static TangleExpr mirror(TangleExpr child);
  static TangleExpr rational(const Slope& s);
  static TangleExpr rational(IntExpr num, IntExpr den);
  static TangleExpr slot(std::string name);
  static TangleExpr closed(TangleExpr child, Closure closure);

  Kind kind() const noexcept;
  const TangleExpr& child(std::size_t i = 0) const;
  std::size_t child_count() const noexcept;
  /// Twist count for HTwist/VTwist; numerator for RationalLeaf.
  const IntExpr& count() const;
  const IntExpr& denominator() const;
  const std::string& slot_name() const;
  Closure closure() const;

  bool is_ground() const;
  bool is_closed() const noexcept { return kind() == Kind::Closed; }
  void collect_slots(std::vector<std::string>& out) const;

  /// Sum of |twist counts| with rational leaves expanded; requires ground.
  Integer crossing_count() const;

  /// Same expression syntax the template parser reads.
  std::string str() const;

  friend bool operator==(const TangleExpr& a, const TangleExpr& b);

 private:
  struct Node;
  explicit TangleExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Rational tangle built by alternating twists along cf_expand(s).
TangleExpr rational_tangle(const Slope& s);

/// Conway fraction of a ground expression built from Zero/Infinity/rational
/// leaves by twists, rotations and mirrors. Throws NotRationalForm otherwise.
Slope tangle_fraction(const TangleExpr& t);

/// Structural simplification: folds nested same-axis twists, drops zero
/// twists, cancels double mirrors and full turns, evaluates ground counts.
TangleExpr normalize(const TangleExpr& t);

/// Replaces ParamSlot leaves by integer tangles and evaluates all counts.
/// Throws UnboundParam. Constraint checking happens in Template::instantiate.
TangleExpr substitute(const TangleExpr& t, const Bindings& bindings);

/// t + R(filler), closed by the requested closure.
TangleExpr fill(const TangleExpr& t, const Slope& filler, Closure closure);

struct ValidationResult {
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

struct BParams {
  long long l = 0, m = 0, n = 0, p = 0, q = 0;
};

struct QParams {
  long long a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;
};

ValidationResult validate_b(const BParams& params);
ValidationResult validate_q(const QParams& params);

}  // namespace tg
