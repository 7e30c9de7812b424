#pragma once

#include "tanglegraph/error.hpp"
#include "tanglegraph/tangle.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tg {

/// One predicate of a template's constraint block.
struct Constraint {
  enum class Kind { AbsAtLeast, AtLeast, AtMost, NotEqual, PairExcluded };

  Kind kind = Kind::AbsAtLeast;
  std::string first;
  std::string second;  // PairExcluded only
  Integer bound = 0;
  Integer bound2 = 0;  // PairExcluded only
  bool plus_minus = false;

  /// Empty when satisfied, otherwise the violation message.
  std::optional<std::string> check(const Bindings& bindings) const;
  std::string str() const;
};

class ConstraintViolation : public Error {
 public:
  explicit ConstraintViolation(ValidationResult report);
  const ValidationResult& report() const noexcept { return report_; }

 private:
  ValidationResult report_;
};

/// Parametric tangle: an expression with ParamSlots plus the constraints its
/// bindings must satisfy.
class Template {
 public:
  Template(std::string name, std::vector<std::string> params, TangleExpr expr,
           std::vector<Constraint> constraints);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& params() const noexcept { return params_; }
  const TangleExpr& expr() const noexcept { return expr_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

  ValidationResult validate(const Bindings& bindings) const;

  /// Throws UnboundParam or ConstraintViolation.
  TangleExpr instantiate(const Bindings& bindings) const;

 private:
  std::string name_;
  std::vector<std::string> params_;
  TangleExpr expr_;
  std::vector<Constraint> constraints_;
};

/// Parses a template file:
///
///   name: B
///   params: l m n p q
///   expr:
///     rot(hsum(...))
///   constraints:
///     |l| >= 2
///     (p,q) != ±(2,1)
///
/// Every header is optional; text before the first header is the expression.
/// Throws ParseError with the 1-based line and column of the problem.
Template parse_template(std::string_view text);

/// Parses a bare tangle expression.
TangleExpr parse_expr(std::string_view text);

/// Parses a comma-separated binding list "l=2,m=-3".
Bindings parse_bindings(std::string_view text);

}  // namespace tg
