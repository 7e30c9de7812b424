#include "tanglegraph/template.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tg {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// Recursive-descent reader over [begin, end) of a larger text; positions are
/// reported relative to the whole text.
class Reader {
 public:
  Reader(std::string_view text, std::size_t begin, std::size_t end) : text_(text), pos_(begin), end_(end) {}

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, message);
  }

  void skip_space() {
    while (pos_ < end_) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < end_ && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= end_;
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, std::min(token.size(), end_ - pos_)) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < end_ && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < end_ &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (start == pos_) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_identifier() {
    skip_space();
    return pos_ < end_ && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_');
  }

  bool peek_digit() {
    skip_space();
    return pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer integer_literal() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < end_ && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer signed_literal() {
    bool negative = false;
    while (true) {
      if (accept("-")) {
        negative = !negative;
      } else if (!accept("+")) {
        break;
      }
    }
    Integer v = integer_literal();
    return negative ? Integer(-v) : v;
  }

  // int := term (('+'|'-') term)*
  IntExpr int_expr() {
    IntExpr lhs = term();
    while (true) {
      if (accept("+")) {
        lhs = IntExpr::add(lhs, term());
      } else if (peek("-")) {
        ++pos_;
        lhs = IntExpr::sub(lhs, term());
      } else {
        return lhs;
      }
    }
  }

  IntExpr term() {
    IntExpr lhs = factor();
    while (accept("*")) lhs = IntExpr::mul(lhs, factor());
    return lhs;
  }

  IntExpr factor() {
    if (accept("-")) return IntExpr::neg(factor());
    if (accept("+")) return factor();
    if (accept("(")) {
      IntExpr e = int_expr();
      expect(")");
      return e;
    }
    if (peek_digit()) return IntExpr(integer_literal());
    if (peek_identifier()) {
      std::size_t at = pos_;
      std::string name = identifier();
      if (name == "slot") {
        expect("(");
        name = identifier();
        expect(")");
      } else if (is_keyword(name)) {
        fail_at(at, "tangle '" + name + "' used where an integer is expected");
      }
      return IntExpr::var(name);
    }
    fail("expected integer expression");
  }

  static bool is_keyword(const std::string& name) {
    static const std::set<std::string> kw = {"zero", "inf", "infinity", "htwist", "vtwist", "hsum", "vsum",
                                             "rot", "mirror", "rat", "numerator", "denominator"};
    return kw.count(name) > 0;
  }

  TangleExpr tangle() {
    if (!peek_identifier()) fail("expected tangle expression");
    std::size_t at = pos_;
    std::string head = identifier();
    if (head == "zero") return TangleExpr::zero();
    if (head == "inf" || head == "infinity") return TangleExpr::infinity();
    expect("(");
    TangleExpr result = TangleExpr::zero();
    if (head == "htwist" || head == "vtwist") {
      TangleExpr child = tangle();
      expect(",");
      IntExpr n = int_expr();
      result = head == "htwist" ? TangleExpr::htwist(child, n) : TangleExpr::vtwist(child, n);
    } else if (head == "hsum" || head == "vsum") {
      result = tangle();
      expect(",");
      do {
        TangleExpr rhs = tangle();
        result = head == "hsum" ? TangleExpr::hsum(result, rhs) : TangleExpr::vsum(result, rhs);
      } while (accept(","));
    } else if (head == "rot") {
      result = TangleExpr::rotate(tangle());
    } else if (head == "mirror") {
      result = TangleExpr::mirror(tangle());
    } else if (head == "rat") {
      IntExpr num = int_expr();
      IntExpr den = 1;
      if (accept("/")) den = int_expr();
      if (num.is_ground() && den.is_ground() && num.value() == 0 && den.value() == 0) {
        fail_at(at, "rat(0/0) is not a slope");
      }
      result = TangleExpr::rational(num, den);
    } else if (head == "slot") {
      result = TangleExpr::slot(identifier());
    } else if (head == "numerator" || head == "denominator") {
      TangleExpr inner = tangle();
      if (inner.is_closed()) fail_at(at, "nested closure");
      result = TangleExpr::closed(inner, head == "numerator" ? Closure::Numerator : Closure::Denominator);
    } else {
      fail_at(at, "unknown tangle constructor '" + head + "'");
    }
    expect(")");
    return result;
  }

  Constraint constraint() {
    Constraint c;
    if (accept("|")) {
      c.first = identifier();
      expect("|");
      if (!accept(">=") && !accept("≥")) fail("expected '>=' after |" + c.first + "|");
      c.kind = Constraint::Kind::AbsAtLeast;
      c.bound = signed_literal();
    } else if (accept("(")) {
      c.kind = Constraint::Kind::PairExcluded;
      c.first = identifier();
      expect(",");
      c.second = identifier();
      expect(")");
      if (!accept("!=") && !accept("≠")) fail("expected '!='");
      if (accept("±") || accept("+-")) c.plus_minus = true;
      expect("(");
      c.bound = signed_literal();
      expect(",");
      c.bound2 = signed_literal();
      expect(")");
    } else {
      c.first = identifier();
      if (accept(">=") || accept("≥")) {
        c.kind = Constraint::Kind::AtLeast;
      } else if (accept("<=") || accept("≤")) {
        c.kind = Constraint::Kind::AtMost;
      } else if (accept("!=") || accept("≠")) {
        c.kind = Constraint::Kind::NotEqual;
      } else {
        fail("expected comparison operator");
      }
      c.bound = signed_literal();
    }
    return c;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_;
  std::size_t end_;
};

struct Section {
  std::string key;
  std::size_t begin;  // offset just after the header
  std::size_t end;
  std::size_t header;
};

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<Section> split_sections(std::string_view text) {
  static const char* keys[] = {"name:", "params:", "expr:", "constraints:"};
  std::vector<Section> sections{{"expr", 0, text.size(), 0}};
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    std::string_view body = trim_left(line);
    for (const char* key : keys) {
      std::string_view k(key);
      if (body.substr(0, k.size()) == k) {
        std::size_t header = line_start + (line.size() - body.size());
        sections.back().end = header;
        sections.push_back({std::string(k.substr(0, k.size() - 1)), header + k.size(), text.size(), header});
        break;
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return sections;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<std::string> Constraint::check(const Bindings& b) const {
  auto value = [&](const std::string& name) -> Integer {
    auto it = b.find(name);
    if (it == b.end()) throw Error(ErrorCode::UnboundParam, "unbound parameter '" + name + "'");
    return it->second;
  };
  bool ok = true;
  switch (kind) {
    case Kind::AbsAtLeast: {
      Integer v = value(first);
      ok = (v < 0 ? Integer(-v) : v) >= bound;
      break;
    }
    case Kind::AtLeast: ok = value(first) >= bound; break;
    case Kind::AtMost: ok = value(first) <= bound; break;
    case Kind::NotEqual: ok = value(first) != bound; break;
    case Kind::PairExcluded: {
      Integer x = value(first);
      Integer y = value(second);
      ok = !(x == bound && y == bound2) && !(plus_minus && x == -bound && y == -bound2);
      break;
    }
  }
  if (ok) return std::nullopt;
  if (kind == Kind::PairExcluded) {
    return "(" + first + "," + second + ")=" + (plus_minus ? "±" : "") + "(" + bound.str() + "," +
           bound2.str() + ") excluded";
  }
  return str();
}

std::string Constraint::str() const {
  switch (kind) {
    case Kind::AbsAtLeast: return "|" + first + "| ≥ " + bound.str();
    case Kind::AtLeast: return first + " ≥ " + bound.str();
    case Kind::AtMost: return first + " ≤ " + bound.str();
    case Kind::NotEqual: return first + " ≠ " + bound.str();
    case Kind::PairExcluded:
      return "(" + first + "," + second + ") ≠ " + (plus_minus ? "±" : "") + "(" + bound.str() + "," +
             bound2.str() + ")";
  }
  return {};
}

ConstraintViolation::ConstraintViolation(ValidationResult report)
    : Error(ErrorCode::ConstraintViolation, "constraint violation: " + join(report.violations, "; ")),
      report_(std::move(report)) {}

Template::Template(std::string name, std::vector<std::string> params, TangleExpr expr,
                   std::vector<Constraint> constraints)
    : name_(std::move(name)), params_(std::move(params)), expr_(std::move(expr)), constraints_(std::move(constraints)) {
  std::vector<std::string> slots;
  expr_.collect_slots(slots);
  std::set<std::string> declared(params_.begin(), params_.end());
  for (const auto& s : slots) {
    if (!declared.count(s)) {
      throw Error(ErrorCode::UnboundParam, "slot '" + s + "' is not declared in params of template '" + name_ + "'");
    }
  }
  for (const auto& c : constraints_) {
    for (const auto* n : {&c.first, &c.second}) {
      if (!n->empty() && !declared.count(*n)) {
        throw Error(ErrorCode::UnboundParam, "constraint mentions undeclared parameter '" + *n + "'");
      }
    }
  }
}

ValidationResult Template::validate(const Bindings& bindings) const {
  ValidationResult r;
  for (const auto& c : constraints_) {
    if (auto v = c.check(bindings)) r.violations.push_back(*v);
  }
  return r;
}

TangleExpr Template::instantiate(const Bindings& bindings) const {
  for (const auto& p : params_) {
    if (!bindings.count(p)) throw Error(ErrorCode::UnboundParam, "unbound parameter '" + p + "'");
  }
  ValidationResult r = validate(bindings);
  if (!r.ok()) throw ConstraintViolation(std::move(r));
  return substitute(expr_, bindings);
}

Template parse_template(std::string_view text) {
  std::string name = "template";
  std::vector<std::string> params;
  bool have_params = false;
  std::optional<TangleExpr> expr;
  std::vector<Constraint> constraints;

  std::set<std::string> seen;
  const auto sections = split_sections(text);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& sec = sections[i];
    Reader r(text, sec.begin, sec.end);
    // sections[0] is the implicit expression before any header
    if (i > 0 && !seen.insert(sec.key).second) {
      r.fail_at(sec.header, "duplicate '" + sec.key + ":' section");
    }
    if (sec.key == "name") {
      name = r.identifier();
      if (!r.at_end()) r.fail("unexpected text after template name");
    } else if (sec.key == "params") {
      have_params = true;
      while (!r.at_end()) {
        params.push_back(r.identifier());
        r.accept(",");
      }
    } else if (sec.key == "expr") {
      if (r.at_end()) continue;
      if (expr) r.fail("second expression");
      expr = r.tangle();
      if (!r.at_end()) r.fail("unexpected text after expression");
    } else if (sec.key == "constraints") {
      while (!r.at_end()) constraints.push_back(r.constraint());
    }
  }
  if (!expr) {
    Reader r(text, text.size(), text.size());
    r.fail("missing tangle expression");
  }
  if (!have_params) {
    std::vector<std::string> slots;
    expr->collect_slots(slots);
    std::set<std::string> uniq(slots.begin(), slots.end());
    params.assign(uniq.begin(), uniq.end());
  }
  return Template(name, params, *expr, constraints);
}

TangleExpr parse_expr(std::string_view text) {
  Reader r(text, 0, text.size());
  TangleExpr t = r.tangle();
  if (!r.at_end()) r.fail("unexpected text after expression");
  return t;
}

Bindings parse_bindings(std::string_view text) {
  Bindings out;
  Reader r(text, 0, text.size());
  while (!r.at_end()) {
    std::string name = r.identifier();
    r.expect("=");
    out[name] = r.signed_literal();
    if (!r.accept(",")) break;
  }
  if (!r.at_end()) r.fail("unexpected text in bindings");
  return out;
}

}  // namespace tg
