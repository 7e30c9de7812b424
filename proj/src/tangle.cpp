#include "tanglegraph/tangle.hpp"

#include "tanglegraph/error.hpp"

#include <cstdlib>
#include <sstream>

namespace tg {

// ---------------------------------------------------------------------------
// IntExpr

struct IntExpr::Node {
  Kind kind;
  Integer value;
  std::string name;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

IntExpr::IntExpr(Integer value)
    : node_(std::make_shared<const Node>(Node{Kind::Literal, std::move(value), {}, nullptr, nullptr})) {}

IntExpr IntExpr::var(std::string name) {
  return IntExpr(std::make_shared<const Node>(Node{Kind::Var, 0, std::move(name), nullptr, nullptr}));
}

IntExpr IntExpr::neg(IntExpr a) {
  if (a.kind() == Kind::Literal) return IntExpr(Integer(-a.value()));
  return IntExpr(std::make_shared<const Node>(Node{Kind::Neg, 0, {}, a.node_, nullptr}));
}

IntExpr IntExpr::add(IntExpr a, IntExpr b) {
  return IntExpr(std::make_shared<const Node>(Node{Kind::Add, 0, {}, a.node_, b.node_}));
}

IntExpr IntExpr::sub(IntExpr a, IntExpr b) {
  return IntExpr(std::make_shared<const Node>(Node{Kind::Sub, 0, {}, a.node_, b.node_}));
}

IntExpr IntExpr::mul(IntExpr a, IntExpr b) {
  return IntExpr(std::make_shared<const Node>(Node{Kind::Mul, 0, {}, a.node_, b.node_}));
}

IntExpr::Kind IntExpr::kind() const noexcept { return node_->kind; }

bool IntExpr::is_ground() const { return node_->kind == Kind::Literal; }

const Integer& IntExpr::value() const {
  if (node_->kind != Kind::Literal) {
    throw Error(ErrorCode::UnboundParam, "expression '" + str() + "' is not ground");
  }
  return node_->value;
}

const std::string& IntExpr::name() const { return node_->name; }

Integer IntExpr::eval(const Bindings& bindings) const {
  switch (node_->kind) {
    case Kind::Literal:
      return node_->value;
    case Kind::Var: {
      auto it = bindings.find(node_->name);
      if (it == bindings.end()) {
        throw Error(ErrorCode::UnboundParam, "unbound parameter '" + node_->name + "'");
      }
      return it->second;
    }
    case Kind::Neg:
      return -IntExpr(node_->a).eval(bindings);
    case Kind::Add:
      return IntExpr(node_->a).eval(bindings) + IntExpr(node_->b).eval(bindings);
    case Kind::Sub:
      return IntExpr(node_->a).eval(bindings) - IntExpr(node_->b).eval(bindings);
    case Kind::Mul:
      return IntExpr(node_->a).eval(bindings) * IntExpr(node_->b).eval(bindings);
  }
  return 0;
}

void IntExpr::collect_vars(std::vector<std::string>& out) const {
  if (node_->kind == Kind::Var) out.push_back(node_->name);
  if (node_->a) IntExpr(node_->a).collect_vars(out);
  if (node_->b) IntExpr(node_->b).collect_vars(out);
}

std::string IntExpr::str() const {
  switch (node_->kind) {
    case Kind::Literal: return node_->value.str();
    case Kind::Var: return node_->name;
    case Kind::Neg: return "-(" + IntExpr(node_->a).str() + ")";
    case Kind::Add: return "(" + IntExpr(node_->a).str() + " + " + IntExpr(node_->b).str() + ")";
    case Kind::Sub: return "(" + IntExpr(node_->a).str() + " - " + IntExpr(node_->b).str() + ")";
    case Kind::Mul: return "(" + IntExpr(node_->a).str() + " * " + IntExpr(node_->b).str() + ")";
  }
  return {};
}

bool operator==(const IntExpr& x, const IntExpr& y) {
  if (x.node_ == y.node_) return true;
  if (x.node_->kind != y.node_->kind) return false;
  switch (x.node_->kind) {
    case IntExpr::Kind::Literal: return x.node_->value == y.node_->value;
    case IntExpr::Kind::Var: return x.node_->name == y.node_->name;
    case IntExpr::Kind::Neg: return IntExpr(x.node_->a) == IntExpr(y.node_->a);
    default:
      return IntExpr(x.node_->a) == IntExpr(y.node_->a) && IntExpr(x.node_->b) == IntExpr(y.node_->b);
  }
}

// ---------------------------------------------------------------------------
// TangleExpr

struct TangleExpr::Node {
  Kind kind;
  std::vector<TangleExpr> children;
  IntExpr count;
  IntExpr den;
  std::string name;
  Closure closure = Closure::Numerator;
};

namespace {

using K = TangleExpr::Kind;

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

TangleExpr TangleExpr::zero() { return TangleExpr(std::make_shared<const Node>(Node{K::Zero, {}, {}, {}, {}})); }

TangleExpr TangleExpr::infinity() {
  return TangleExpr(std::make_shared<const Node>(Node{K::Infinity, {}, {}, {}, {}}));
}

TangleExpr TangleExpr::htwist(TangleExpr child, IntExpr n) {
  return TangleExpr(std::make_shared<const Node>(Node{K::HTwist, {std::move(child)}, std::move(n), {}, {}}));
}

TangleExpr TangleExpr::vtwist(TangleExpr child, IntExpr n) {
  return TangleExpr(std::make_shared<const Node>(Node{K::VTwist, {std::move(child)}, std::move(n), {}, {}}));
}

TangleExpr TangleExpr::hsum(TangleExpr left, TangleExpr right) {
  return TangleExpr(std::make_shared<const Node>(Node{K::HSum, {std::move(left), std::move(right)}, {}, {}, {}}));
}

TangleExpr TangleExpr::vsum(TangleExpr top, TangleExpr bottom) {
  return TangleExpr(std::make_shared<const Node>(Node{K::VSum, {std::move(top), std::move(bottom)}, {}, {}, {}}));
}

TangleExpr TangleExpr::rotate(TangleExpr child) {
  return TangleExpr(std::make_shared<const Node>(Node{K::Rotate90, {std::move(child)}, {}, {}, {}}));
}

TangleExpr TangleExpr::mirror(TangleExpr child) {
  return TangleExpr(std::make_shared<const Node>(Node{K::Mirror, {std::move(child)}, {}, {}, {}}));
}

TangleExpr TangleExpr::rational(const Slope& s) { return rational(IntExpr(s.num()), IntExpr(s.den())); }

TangleExpr TangleExpr::rational(IntExpr num, IntExpr den) {
  return TangleExpr(std::make_shared<const Node>(Node{K::RationalLeaf, {}, std::move(num), std::move(den), {}}));
}

TangleExpr TangleExpr::slot(std::string name) {
  return TangleExpr(std::make_shared<const Node>(Node{K::ParamSlot, {}, {}, {}, std::move(name)}));
}

TangleExpr TangleExpr::closed(TangleExpr child, Closure closure) {
  if (child.kind() == K::Closed) {
    throw Error(ErrorCode::NotRationalForm, "cannot close an already closed expression");
  }
  return TangleExpr(std::make_shared<const Node>(Node{K::Closed, {std::move(child)}, {}, {}, {}, closure}));
}

TangleExpr::Kind TangleExpr::kind() const noexcept { return node_->kind; }

const TangleExpr& TangleExpr::child(std::size_t i) const { return node_->children.at(i); }

std::size_t TangleExpr::child_count() const noexcept { return node_->children.size(); }

const IntExpr& TangleExpr::count() const { return node_->count; }

const IntExpr& TangleExpr::denominator() const { return node_->den; }

const std::string& TangleExpr::slot_name() const { return node_->name; }

Closure TangleExpr::closure() const { return node_->closure; }

bool TangleExpr::is_ground() const {
  switch (kind()) {
    case K::ParamSlot: return false;
    case K::HTwist:
    case K::VTwist:
      if (!count().is_ground()) return false;
      break;
    case K::RationalLeaf:
      return count().is_ground() && denominator().is_ground();
    default:
      break;
  }
  for (const auto& c : node_->children) {
    if (!c.is_ground()) return false;
  }
  return true;
}

void TangleExpr::collect_slots(std::vector<std::string>& out) const {
  switch (kind()) {
    case K::ParamSlot: out.push_back(slot_name()); break;
    case K::HTwist:
    case K::VTwist: count().collect_vars(out); break;
    case K::RationalLeaf:
      count().collect_vars(out);
      denominator().collect_vars(out);
      break;
    default: break;
  }
  for (const auto& c : node_->children) c.collect_slots(out);
}

Integer TangleExpr::crossing_count() const {
  Integer total = 0;
  switch (kind()) {
    case K::ParamSlot:
      throw Error(ErrorCode::UnboundParam, "slot '" + slot_name() + "' is not instantiated");
    case K::HTwist:
    case K::VTwist: total += abs_int(count().value()); break;
    case K::RationalLeaf: {
      Slope s = Slope::reduce(count().value(), denominator().value());
      if (!s.is_infinite()) {
        for (const auto& a : cf_expand(s).terms) total += abs_int(a);
      }
      break;
    }
    default: break;
  }
  for (const auto& c : node_->children) total += c.crossing_count();
  return total;
}

std::string TangleExpr::str() const {
  switch (kind()) {
    case K::Zero: return "zero";
    case K::Infinity: return "inf";
    case K::HTwist: return "htwist(" + child().str() + ", " + count().str() + ")";
    case K::VTwist: return "vtwist(" + child().str() + ", " + count().str() + ")";
    case K::HSum: return "hsum(" + child(0).str() + ", " + child(1).str() + ")";
    case K::VSum: return "vsum(" + child(0).str() + ", " + child(1).str() + ")";
    case K::Rotate90: return "rot(" + child().str() + ")";
    case K::Mirror: return "mirror(" + child().str() + ")";
    case K::RationalLeaf: return "rat(" + count().str() + "/" + denominator().str() + ")";
    case K::ParamSlot: return "slot(" + slot_name() + ")";
    case K::Closed:
      return std::string(closure() == Closure::Numerator ? "numerator(" : "denominator(") + child().str() + ")";
  }
  return {};
}

bool operator==(const TangleExpr& x, const TangleExpr& y) {
  if (x.node_ == y.node_) return true;
  const auto& a = *x.node_;
  const auto& b = *y.node_;
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case K::HTwist:
    case K::VTwist:
      if (!(a.count == b.count)) return false;
      break;
    case K::RationalLeaf:
      return a.count == b.count && a.den == b.den;
    case K::ParamSlot:
      return a.name == b.name;
    case K::Closed:
      if (a.closure != b.closure) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(a.children[i] == b.children[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Rational tangles

TangleExpr rational_tangle(const Slope& s) {
  if (s.is_infinite()) return TangleExpr::infinity();
  if (s.is_zero()) return TangleExpr::zero();
  const auto terms = cf_expand(s).terms;  // leading term first
  const std::size_t k = terms.size();
  // Built from the innermost term outward; the leading term is always an
  // horizontal twist, so an even-length expansion starts from infinity.
  TangleExpr t = (k % 2 == 1) ? TangleExpr::htwist(TangleExpr::zero(), terms[k - 1])
                              : TangleExpr::vtwist(TangleExpr::infinity(), terms[k - 1]);
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t j = k - 1 - i;  // 0 is the leading term
    const Integer& a = terms[j];
    const bool horizontal = j % 2 == 0;
    if (a == 0) continue;  // only the leading term can be zero
    t = horizontal ? TangleExpr::htwist(t, a) : TangleExpr::vtwist(t, a);
  }
  return t;
}

Slope tangle_fraction(const TangleExpr& t) {
  switch (t.kind()) {
    case K::Zero: return Slope();
    case K::Infinity: return Slope::infinity();
    case K::HTwist: {
      Slope s = tangle_fraction(t.child());
      if (s.is_infinite()) return s;
      return s + Slope::integer(t.count().value());
    }
    case K::VTwist: {
      Slope r = reciprocal(tangle_fraction(t.child()));
      if (r.is_infinite()) return Slope();
      return reciprocal(r + Slope::integer(t.count().value()));
    }
    case K::Rotate90: return slope_rotate(tangle_fraction(t.child()));
    case K::Mirror: return -tangle_fraction(t.child());
    case K::RationalLeaf: return Slope::reduce(t.count().value(), t.denominator().value());
    case K::HSum:
    case K::VSum:
      throw Error(ErrorCode::NotRationalForm, "tangle sum is not in rational form: " + t.str());
    case K::ParamSlot:
      throw Error(ErrorCode::NotRationalForm, "expression is not ground: " + t.str());
    case K::Closed:
      throw Error(ErrorCode::NotRationalForm, "closed expression has no fraction");
  }
  return Slope();
}

// ---------------------------------------------------------------------------
// Normalization and substitution

namespace {

TangleExpr make_twist(K kind, TangleExpr child, IntExpr n) {
  return kind == K::HTwist ? TangleExpr::htwist(std::move(child), std::move(n))
                           : TangleExpr::vtwist(std::move(child), std::move(n));
}

}  // namespace

TangleExpr normalize(const TangleExpr& t) {
  switch (t.kind()) {
    case K::Zero:
    case K::Infinity:
    case K::ParamSlot:
      return t;
    case K::RationalLeaf:
      if (t.count().is_ground() && t.denominator().is_ground()) {
        return TangleExpr::rational(Slope::reduce(t.count().value(), t.denominator().value()));
      }
      return t;
    case K::HTwist:
    case K::VTwist: {
      TangleExpr c = normalize(t.child());
      IntExpr n = t.count();
      if (n.is_ground() && n.value() == 0) return c;
      if (c.kind() == t.kind() && n.is_ground() && c.count().is_ground()) {
        Integer total = n.value() + c.count().value();
        if (total == 0) return c.child();
        return make_twist(t.kind(), c.child(), total);
      }
      return make_twist(t.kind(), c, n);
    }
    case K::HSum:
    case K::VSum: {
      TangleExpr left = normalize(t.child(0));
      TangleExpr right = normalize(t.child(1));
      // Re-associate to the left.
      while (right.kind() == t.kind()) {
        left = t.kind() == K::HSum ? TangleExpr::hsum(left, right.child(0))
                                   : TangleExpr::vsum(left, right.child(0));
        right = right.child(1);
      }
      return t.kind() == K::HSum ? TangleExpr::hsum(left, right) : TangleExpr::vsum(left, right);
    }
    case K::Mirror: {
      TangleExpr c = normalize(t.child());
      if (c.kind() == K::Mirror) return c.child();
      return TangleExpr::mirror(c);
    }
    case K::Rotate90: {
      int turns = 0;
      const TangleExpr* cur = &t;
      while (cur->kind() == K::Rotate90) {
        ++turns;
        cur = &cur->child();
      }
      TangleExpr base = normalize(*cur);
      while (base.kind() == K::Rotate90) {
        ++turns;
        base = base.child();
      }
      for (int i = 0; i < turns % 4; ++i) base = TangleExpr::rotate(base);
      return base;
    }
    case K::Closed:
      return TangleExpr::closed(normalize(t.child()), t.closure());
  }
  return t;
}

TangleExpr substitute(const TangleExpr& t, const Bindings& bindings) {
  switch (t.kind()) {
    case K::Zero:
    case K::Infinity:
      return t;
    case K::ParamSlot:
      return TangleExpr::htwist(TangleExpr::zero(), IntExpr::var(t.slot_name()).eval(bindings));
    case K::RationalLeaf: {
      Integer p = t.count().eval(bindings);
      Integer q = t.denominator().eval(bindings);
      return TangleExpr::rational(Slope::reduce(p, q));
    }
    case K::HTwist:
    case K::VTwist:
      return make_twist(t.kind(), substitute(t.child(), bindings), t.count().eval(bindings));
    case K::HSum:
      return TangleExpr::hsum(substitute(t.child(0), bindings), substitute(t.child(1), bindings));
    case K::VSum:
      return TangleExpr::vsum(substitute(t.child(0), bindings), substitute(t.child(1), bindings));
    case K::Rotate90:
      return TangleExpr::rotate(substitute(t.child(), bindings));
    case K::Mirror:
      return TangleExpr::mirror(substitute(t.child(), bindings));
    case K::Closed:
      return TangleExpr::closed(substitute(t.child(), bindings), t.closure());
  }
  return t;
}

TangleExpr fill(const TangleExpr& t, const Slope& filler, Closure closure) {
  if (t.is_closed()) throw Error(ErrorCode::NotClosed, "cannot fill a closed expression");
  return TangleExpr::closed(TangleExpr::hsum(t, rational_tangle(filler)), closure);
}

// ---------------------------------------------------------------------------
// Family parameter constraints

namespace {

void require_abs(std::vector<std::string>& out, long long v, long long bound, const char* name) {
  if (std::llabs(v) < bound) out.push_back("|" + std::string(name) + "| ≥ " + std::to_string(bound));
}

void exclude_pair(std::vector<std::string>& out, long long x, long long y, const char* names) {
  if ((x == 2 && y == 1) || (x == -2 && y == -1)) {
    out.push_back("(" + std::string(names) + ")=±(2,1) excluded");
  }
}

}  // namespace

ValidationResult validate_b(const BParams& b) {
  ValidationResult r;
  require_abs(r.violations, b.l, 2, "ℓ");
  require_abs(r.violations, b.m, 2, "m");
  require_abs(r.violations, b.n, 3, "n");
  require_abs(r.violations, b.p, 2, "p");
  require_abs(r.violations, b.q, 1, "q");
  exclude_pair(r.violations, b.p, b.q, "p,q");
  return r;
}

ValidationResult validate_q(const QParams& q) {
  ValidationResult r;
  require_abs(r.violations, q.a, 2, "a");
  require_abs(r.violations, q.b, 1, "b");
  require_abs(r.violations, q.c, 2, "c");
  require_abs(r.violations, q.d, 3, "d");
  require_abs(r.violations, q.e, 2, "e");
  require_abs(r.violations, q.f, 1, "f");
  exclude_pair(r.violations, q.a, q.b, "a,b");
  exclude_pair(r.violations, q.e, q.f, "e,f");
  return r;
}

}  // namespace tg
