#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tanglegraph/error.hpp"
#include "tanglegraph/tangle.hpp"
#include "tanglegraph/template.hpp"

#include <fstream>
#include <sstream>

using tg::Closure;
using tg::Slope;
using tg::TangleExpr;
using K = tg::TangleExpr::Kind;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

tg::Template b_template() { return tg::parse_template(slurp(TG_SOURCE_DIR "/templates/b_family.tangle")); }
tg::Template q_template() { return tg::parse_template(slurp(TG_SOURCE_DIR "/templates/q_family.tangle")); }

tg::Bindings b_bind(long long l, long long m, long long n, long long p, long long q) {
  return {{"l", l}, {"m", m}, {"n", n}, {"p", p}, {"q", q}};
}

tg::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const tg::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return tg::ErrorCode::Parse;
}

}  // namespace

TEST_CASE("validate_b") {
  CHECK(tg::validate_b({2, 2, 3, 3, 2}).ok());
  auto excluded = tg::validate_b({2, 2, 3, 2, 1});
  REQUIRE(excluded.violations.size() == 1);
  CHECK(excluded.violations[0] == "(p,q)=±(2,1) excluded");
  auto small_l = tg::validate_b({1, 2, 3, 3, 2});
  REQUIRE(small_l.violations.size() == 1);
  CHECK(small_l.violations[0] == "|ℓ| ≥ 2");
  CHECK(tg::validate_b({2, 2, 3, -2, -1}).violations == std::vector<std::string>{"(p,q)=±(2,1) excluded"});
  CHECK(tg::validate_b({2, 2, 3, 2, -1}).ok());
  CHECK(tg::validate_b({0, 0, 0, 0, 0}).violations.size() == 5);
}

TEST_CASE("validate_q") {
  CHECK(tg::validate_q({2, 2, 2, 3, 3, 2}).ok());
  CHECK(tg::validate_q({2, 2, 2, 3, 2, 1}).violations == std::vector<std::string>{"(e,f)=±(2,1) excluded"});
  CHECK(tg::validate_q({2, 2, 2, 2, 3, 2}).violations == std::vector<std::string>{"|d| ≥ 3"});
  CHECK(tg::validate_q({-2, -1, 2, 3, 3, 2}).violations == std::vector<std::string>{"(a,b)=±(2,1) excluded"});
}

TEST_CASE("rational_tangle examples") {
  CHECK(tg::rational_tangle(Slope::integer(0)).kind() == K::Zero);
  CHECK(tg::rational_tangle(Slope::infinity()).kind() == K::Infinity);
  TangleExpr t = tg::rational_tangle(Slope::reduce(3, 2));
  CHECK(tg::tangle_fraction(t) == Slope::reduce(3, 2));
  CHECK(t.crossing_count() == 3);
  CHECK(tg::tangle_fraction(tg::rational_tangle(Slope::reduce(12, 5))) == Slope::reduce(12, 5));
}

TEST_CASE("tangle_fraction examples") {
  CHECK(tg::tangle_fraction(TangleExpr::zero()) == Slope::integer(0));
  CHECK(tg::tangle_fraction(TangleExpr::infinity()) == Slope::infinity());
  CHECK(tg::tangle_fraction(TangleExpr::htwist(TangleExpr::zero(), 5)) == Slope::integer(5));
  CHECK(tg::tangle_fraction(TangleExpr::vtwist(TangleExpr::infinity(), 3)) == Slope::reduce(1, 3));
  CHECK(tg::tangle_fraction(TangleExpr::rotate(TangleExpr::htwist(TangleExpr::zero(), 2))) == Slope::reduce(-1, 2));
  CHECK(tg::tangle_fraction(TangleExpr::mirror(tg::rational_tangle(Slope::reduce(7, 3)))) == Slope::reduce(-7, 3));
  auto sum = TangleExpr::hsum(TangleExpr::zero(), TangleExpr::zero());
  CHECK(code_of([&] { tg::tangle_fraction(sum); }) == tg::ErrorCode::NotRationalForm);
  CHECK(code_of([] { tg::tangle_fraction(TangleExpr::slot("n")); }) == tg::ErrorCode::NotRationalForm);
}

TEST_CASE("rational_tangle and tangle_fraction are inverse") {
  for (int p = -100; p <= 100; ++p) {
    for (int q = 0; q <= 100; ++q) {
      if (oracle::gcd(p, q) != 1) continue;
      Slope s = Slope::reduce(p, q);
      TangleExpr t = tg::rational_tangle(s);
      REQUIRE(tg::tangle_fraction(t) == s);
    }
  }
}

TEST_CASE("mirror is an involution") {
  for (auto s : {Slope::reduce(3, 7), Slope::reduce(-5, 2), Slope::integer(4)}) {
    TangleExpr t = TangleExpr::hsum(tg::rational_tangle(s), TangleExpr::rotate(tg::rational_tangle(s)));
    CHECK(tg::normalize(TangleExpr::mirror(TangleExpr::mirror(t))) == tg::normalize(t));
  }
}

TEST_CASE("normalize folds twists") {
  auto t = TangleExpr::htwist(TangleExpr::htwist(TangleExpr::zero(), 2), 3);
  CHECK(tg::normalize(t) == TangleExpr::htwist(TangleExpr::zero(), 5));
  auto z = TangleExpr::htwist(TangleExpr::infinity(), 0);
  CHECK(tg::normalize(z) == TangleExpr::infinity());
}

TEST_CASE("fill builds a closed sum") {
  TangleExpr f = tg::fill(TangleExpr::zero(), Slope::infinity(), Closure::Numerator);
  CHECK(f.is_closed());
  CHECK(f.closure() == Closure::Numerator);
  CHECK(f.child().kind() == K::HSum);
  CHECK(code_of([&] { tg::fill(f, Slope::integer(0), Closure::Numerator); }) == tg::ErrorCode::NotClosed);
}

TEST_CASE("expression text round trip") {
  const char* texts[] = {
      "htwist(vsum(rat(1/2), slot(n)), slot(m))",
      "rot(hsum(zero, inf, mirror(vtwist(htwist(zero, -3), 2))))",
      "numerator(hsum(rat(3/5), rat(-2/7)))",
      "htwist(zero, 2*n - 1)",
  };
  for (const char* text : texts) {
    TangleExpr t = tg::parse_expr(text);
    CHECK(tg::parse_expr(t.str()) == t);
  }
}

TEST_CASE("instantiate") {
  tg::Template one = tg::parse_template("htwist(zero, slot(n))\nconstraints:\n|n| >= 1\n");
  TangleExpr t = one.instantiate({{"n", 4}});
  CHECK(t == TangleExpr::htwist(TangleExpr::zero(), 4));
  CHECK(code_of([&] { one.instantiate({}); }) == tg::ErrorCode::UnboundParam);
  CHECK(code_of([&] { one.instantiate({{"n", 0}}); }) == tg::ErrorCode::ConstraintViolation);

  tg::Template b = b_template();
  CHECK(b.name() == "B");
  CHECK(b.params() == std::vector<std::string>{"l", "m", "n", "p", "q"});
  TangleExpr g = b.instantiate(b_bind(2, 2, 3, 3, 2));
  CHECK(g.is_ground());
  try {
    b.instantiate(b_bind(2, 2, 3, 2, 1));
    FAIL("expected a violation");
  } catch (const tg::ConstraintViolation& e) {
    CHECK(e.report().violations == std::vector<std::string>{"(p,q)=±(2,1) excluded"});
  }
}

TEST_CASE("B template rejects exactly what validate_b rejects") {
  tg::Template b = b_template();
  long long mismatches = 0;
  for (long long l = -4; l <= 4; ++l)
    for (long long m = -4; m <= 4; ++m)
      for (long long n = -4; n <= 4; ++n)
        for (long long p = -4; p <= 4; ++p)
          for (long long q = -4; q <= 4; ++q) {
            bool accepted = true;
            try {
              b.instantiate(b_bind(l, m, n, p, q));
            } catch (const tg::ConstraintViolation&) {
              accepted = false;
            }
            if (accepted != tg::validate_b({l, m, n, p, q}).ok()) ++mismatches;
          }
  CHECK(mismatches == 0);
}

TEST_CASE("Q template rejects exactly what validate_q rejects") {
  tg::Template q = q_template();
  long long mismatches = 0;
  for (long long a = -4; a <= 4; ++a)
    for (long long b = -4; b <= 4; ++b)
      for (long long c = -4; c <= 4; ++c)
        for (long long d = -4; d <= 4; ++d)
          for (long long e = -4; e <= 4; ++e)
            for (long long f = -4; f <= 4; ++f) {
              tg::Bindings bind{{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"e", e}, {"f", f}};
              if (q.validate(bind).ok() != tg::validate_q({a, b, c, d, e, f}).ok()) ++mismatches;
            }
  CHECK(mismatches == 0);
  CHECK(q.instantiate({{"a", 2}, {"b", 2}, {"c", 2}, {"d", 3}, {"e", 3}, {"f", 2}}).is_ground());
}

TEST_CASE("template parse errors carry positions") {
  auto where = [](const std::string& text) {
    try {
      tg::parse_template(text);
    } catch (const tg::ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair{0, 0};
  };
  CHECK(where("htwist(zero, )") == std::pair{1, 14});
  CHECK(where("hsum(zero,\n  zero,\n  bogus(1))").first == 3);
  CHECK(where("zero\nconstraints:\n|n| > 2\n").first == 3);
  CHECK(where("htwist(zero, 1").first == 1);
  CHECK(where("").first >= 1);
  CHECK_THROWS_AS(tg::parse_template("name: x\nparams: n\nexpr: htwist(zero, m)\n"), tg::Error);
  CHECK_THROWS_AS(tg::parse_template("expr: zero\nexpr: inf\n"), tg::ParseError);
}

TEST_CASE("parse_bindings") {
  auto b = tg::parse_bindings("l=2, m=-3,n=+4");
  CHECK(b.at("l") == 2);
  CHECK(b.at("m") == -3);
  CHECK(b.at("n") == 4);
  CHECK_THROWS_AS(tg::parse_bindings("l=2,m"), tg::ParseError);
}
